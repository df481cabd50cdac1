#include "lchoose/canonical.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "lchoose/error.hpp"

namespace lchoose {

std::vector<ClassColumns> to_columns(const ListAssignment& lists, const ColourPartition& partition) {
    if (lists.vertex_count() > kMaxVertices) throw ContractError("at most 64 vertices are supported");
    if (partition.universe_size() != lists.universe_size()) {
        throw ContractError("partition and lists disagree on the universe size");
    }
    std::vector<ClassColumns> classes(static_cast<std::size_t>(partition.class_count()));
    for (int i = 0; i < partition.class_count(); ++i) classes[static_cast<std::size_t>(i)].quota = partition.quota(i);
    for (int c = 0; c < lists.universe_size(); ++c) {
        VertexSet col = 0;
        for (int v = 0; v < lists.vertex_count(); ++v) {
            if (contains(lists.list(v), c)) col |= VertexSet{1} << v;
        }
        classes[static_cast<std::size_t>(partition.class_of(c))].columns.push_back(col);
    }
    return classes;
}

LambdaAssignment from_columns(int vertex_count, const Lambda& lambda, const std::vector<ClassColumns>& classes) {
    if (static_cast<int>(classes.size()) != lambda.size()) throw ContractError("class count differs from lambda size");
    std::vector<ColourSet> lists(static_cast<std::size_t>(vertex_count), 0);
    std::vector<int> class_of;
    int colour = 0;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (classes[i].quota != lambda.part(static_cast<int>(i))) {
            throw ContractError("class quota does not match lambda part");
        }
        for (VertexSet col : classes[i].columns) {
            if (colour >= kMaxColours) throw ContractError("more than 64 colours");
            for (int v = 0; v < vertex_count; ++v) {
                if ((col >> v) & 1U) lists[static_cast<std::size_t>(v)] |= colour_bit(colour);
            }
            class_of.push_back(static_cast<int>(i));
            ++colour;
        }
    }
    return {ListAssignment(colour, std::move(lists)), ColourPartition(lambda, std::move(class_of))};
}

namespace {

template <typename Key>
std::vector<int> compress(const std::vector<Key>& sigs) {
    std::map<Key, int> ids;
    for (const auto& s : sigs) ids.emplace(s, 0);
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    std::vector<int> out;
    out.reserve(sigs.size());
    for (const auto& s : sigs) out.push_back(ids.at(s));
    return out;
}

int distinct_count(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return static_cast<int>(std::unique(v.begin(), v.end()) - v.begin());
}

// A permutable subrange of one of the sequences making up the vertex order.
struct Cell {
    std::vector<int>* seq;
    std::size_t begin;
    std::size_t end;
};

void add_cells(std::vector<int>& seq, const std::vector<int>& label_of, std::vector<Cell>& cells) {
    std::size_t i = 0;
    while (i < seq.size()) {
        std::size_t j = i + 1;
        while (j < seq.size() && label_of[static_cast<std::size_t>(seq[j])] == label_of[static_cast<std::size_t>(seq[i])]) ++j;
        if (j - i > 1) cells.push_back({&seq, i, j});
        i = j;
    }
}

}  // namespace

CanonicalForm canonical_form(const MultipartiteGraph& graph, const std::vector<ClassColumns>& classes) {
    const int n = graph.vertex_count();
    if (n > kMaxVertices) throw ContractError("at most 64 vertices are supported");
    const auto nu = static_cast<std::size_t>(n);

    // Flattened column table.
    std::vector<int> col_quota;
    std::vector<VertexSet> cols;
    for (const auto& cls : classes) {
        for (VertexSet c : cls.columns) {
            col_quota.push_back(cls.quota);
            cols.push_back(c);
        }
    }

    // Colour refinement of vertices, starting from part sizes.
    std::vector<int> label(nu);
    for (int v = 0; v < n; ++v) label[static_cast<std::size_t>(v)] = graph.part_size(graph.part_of(v));
    int distinct = distinct_count(label);
    for (int round = 0; round <= n; ++round) {
        std::vector<std::vector<int>> col_sigs(cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            auto& sig = col_sigs[c];
            sig.push_back(col_quota[c]);
            for (int v = 0; v < n; ++v) {
                if ((cols[c] >> v) & 1U) sig.push_back(label[static_cast<std::size_t>(v)]);
            }
            std::sort(sig.begin() + 1, sig.end());
        }
        const std::vector<int> col_id = compress(col_sigs);
        std::vector<std::vector<int>> vsigs(nu);
        for (int v = 0; v < n; ++v) {
            auto& sig = vsigs[static_cast<std::size_t>(v)];
            sig.push_back(label[static_cast<std::size_t>(v)]);
            for (std::size_t c = 0; c < cols.size(); ++c) {
                if ((cols[c] >> v) & 1U) sig.push_back(col_id[c]);
            }
            std::sort(sig.begin() + 1, sig.end());
        }
        label = compress(vsigs);
        const int now = distinct_count(label);
        if (now == distinct) break;
        distinct = now;
    }

    // Vertex sequence per part, sorted by label.
    const int parts = graph.part_count();
    std::vector<std::vector<int>> vert_seq(static_cast<std::size_t>(parts));
    std::vector<std::vector<int>> part_sig(static_cast<std::size_t>(parts));
    for (int p = 0; p < parts; ++p) {
        auto& seq = vert_seq[static_cast<std::size_t>(p)];
        for (int v = graph.part_begin(p); v < graph.part_end(p); ++v) seq.push_back(v);
        std::stable_sort(seq.begin(), seq.end(), [&](int a, int b) {
            return label[static_cast<std::size_t>(a)] < label[static_cast<std::size_t>(b)];
        });
        auto& sig = part_sig[static_cast<std::size_t>(p)];
        sig.push_back(-graph.part_size(p));
        for (int v : seq) sig.push_back(label[static_cast<std::size_t>(v)]);
    }
    const std::vector<int> part_label = compress(part_sig);

    // Parts sorted by (size descending, contents); sizes are already grouped.
    std::vector<int> part_seq(static_cast<std::size_t>(parts));
    for (int p = 0; p < parts; ++p) part_seq[static_cast<std::size_t>(p)] = p;
    std::stable_sort(part_seq.begin(), part_seq.end(), [&](int a, int b) {
        return part_label[static_cast<std::size_t>(a)] < part_label[static_cast<std::size_t>(b)];
    });

    std::vector<Cell> cells;
    add_cells(part_seq, part_label, cells);
    for (auto& seq : vert_seq) add_cells(seq, label, cells);
    for (auto& cell : cells) std::sort(cell.seq->begin() + static_cast<std::ptrdiff_t>(cell.begin),
                                       cell.seq->begin() + static_cast<std::ptrdiff_t>(cell.end));

    std::vector<int> pos(nu);
    std::vector<std::uint64_t> code;
    std::vector<std::uint64_t> best;
    std::vector<std::pair<int, std::vector<std::uint64_t>>> blocks(classes.size());

    while (true) {
        int next = 0;
        for (int p : part_seq) {
            for (int v : vert_seq[static_cast<std::size_t>(p)]) pos[static_cast<std::size_t>(v)] = next++;
        }
        for (std::size_t i = 0; i < classes.size(); ++i) {
            auto& [quota, mapped] = blocks[i];
            quota = classes[i].quota;
            mapped.clear();
            for (VertexSet col : classes[i].columns) {
                std::uint64_t t = 0;
                for (VertexSet rest = col; rest != 0; rest &= rest - 1) {
                    int v = std::countr_zero(rest);
                    t |= std::uint64_t{1} << (n - 1 - pos[static_cast<std::size_t>(v)]);
                }
                mapped.push_back(t);
            }
            std::sort(mapped.begin(), mapped.end(), std::greater<>());
        }
        std::sort(blocks.begin(), blocks.end());
        code.clear();
        for (const auto& [quota, mapped] : blocks) {
            code.push_back(static_cast<std::uint64_t>(quota));
            code.push_back(mapped.size());
            code.insert(code.end(), mapped.begin(), mapped.end());
        }
        if (best.empty() || code < best) best = code;

        // Advance the odometer over all tied cells.
        std::size_t idx = cells.size();
        bool advanced = false;
        while (idx > 0) {
            --idx;
            auto& cell = cells[idx];
            auto first = cell.seq->begin() + static_cast<std::ptrdiff_t>(cell.begin);
            auto last = cell.seq->begin() + static_cast<std::ptrdiff_t>(cell.end);
            if (std::next_permutation(first, last)) {
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }

    CanonicalForm out;
    out.key.reserve(8 + graph.part_sizes().size() + best.size() * 8);
    auto put = [&](std::uint64_t x) {
        for (int b = 7; b >= 0; --b) out.key.push_back(static_cast<char>((x >> (8 * b)) & 0xFF));
    };
    put(static_cast<std::uint64_t>(n));
    for (int s : graph.part_sizes()) put(static_cast<std::uint64_t>(s));
    for (std::uint64_t x : best) put(x);

    std::size_t at = 0;
    while (at < best.size()) {
        ClassColumns cls;
        cls.quota = static_cast<int>(best[at++]);
        const auto count = static_cast<std::size_t>(best[at++]);
        for (std::size_t j = 0; j < count; ++j) {
            const std::uint64_t t = best[at++];
            VertexSet col = 0;
            for (int p = 0; p < n; ++p) {
                if ((t >> (n - 1 - p)) & 1U) col |= VertexSet{1} << p;
            }
            cls.columns.push_back(col);
        }
        out.classes.push_back(std::move(cls));
    }
    return out;
}

std::string canonical_key(const ListAssignment& lists, const MultipartiteGraph& graph,
                          const ColourPartition& partition) {
    if (lists.vertex_count() != graph.vertex_count()) {
        throw ContractError("assignment has " + std::to_string(lists.vertex_count()) + " lists but graph has " +
                            std::to_string(graph.vertex_count()) + " vertices");
    }
    return canonical_form(graph, to_columns(lists, partition)).key;
}

}  // namespace lchoose
