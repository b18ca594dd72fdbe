#ifndef ACT_JORDAN_HPP
#define ACT_JORDAN_HPP

#include <algorithm>
#include <complex>
#include <string>
#include <vector>

namespace act {

// Conjugacy-class data of a square operator: one entry per distinct complex
// eigenvalue, carrying the multiset of Jordan block sizes. Exact-path entries
// reference a squarefree factor (factor_id, root_index within the factor's
// roots ordered by (re, im)); numeric-path entries have factor_id == -1.
// Either way an approximate eigenvalue is provided for display.
struct JordanStructure {
    struct Entry {
        int factor_id = -1;
        int root_index = 0;
        std::complex<double> eigenvalue{0.0, 0.0};
        std::vector<int> blocks;  // sorted descending
    };
    std::vector<Entry> entries;
    std::vector<std::string> factor_exprs;  // exact path: pairwise-coprime squarefree factors
    bool unreliable = false;                // numeric path: a rank decision was marginal

    int p() const { return static_cast<int>(entries.size()); }
    int total_block_size() const {
        int t = 0;
        for (const auto& e : entries)
            for (int b : e.blocks) t += b;
        return t;
    }
};

// Canonical eigenvalue-anonymous key: the sorted multiset of block-size
// multisets. Two operators have the same Jordan type (same number of distinct
// eigenvalues, same block counts and sizes) iff their keys compare equal.
struct StructureKey {
    std::vector<std::vector<int>> blocks;

    int p() const { return static_cast<int>(blocks.size()); }
    friend bool operator==(const StructureKey& a, const StructureKey& b) { return a.blocks == b.blocks; }
    friend bool operator!=(const StructureKey& a, const StructureKey& b) { return !(a == b); }

    std::string to_string() const {
        std::string s = "p=" + std::to_string(p()) + " blocks={";
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            s += i ? ",[" : "[";
            for (std::size_t j = 0; j < blocks[i].size(); ++j)
                s += (j ? "," : "") + std::to_string(blocks[i][j]);
            s += "]";
        }
        return s + "}";
    }
};

inline StructureKey structure_signature(const JordanStructure& js) {
    StructureKey key;
    key.blocks.reserve(js.entries.size());
    for (const auto& e : js.entries) {
        std::vector<int> b = e.blocks;
        std::sort(b.begin(), b.end(), std::greater<int>());
        key.blocks.push_back(std::move(b));
    }
    std::sort(key.blocks.begin(), key.blocks.end());
    return key;
}

} // namespace act

#endif
