#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "iqucs/statevector.hpp"
#include "iqucs/wordlist.hpp"

namespace iqucs {

// One data point. The original fields are fixed at ingestion; the current
// fields are reassigned every iteration as the working set shrinks.
// current_index == -1 marks a record filtered out of the search.
struct PairRecord {
    int original_index = 0;
    int original_value = 0;
    int current_index = -1;
    int current_value = 0;

    bool alive() const { return current_index >= 0; }

    friend bool operator==(const PairRecord&, const PairRecord&) = default;
};

// The values being searched for, expressed as original values.
struct TargetSet {
    std::set<int> values;
};

// The iteration-i working set: alive records with freshly compacted indexes
// and values, the register widths they fit in, and the original->current
// bookkeeping maps.
struct ProblemInstance {
    int iteration = 1;
    std::vector<PairRecord> pairs; // alive records in encounter order
    int idx_qubits = 1;
    int val_qubits = 1;
    std::map<int, int> map_i; // original index -> current index
    std::map<int, int> map_v; // original value -> current value
};

inline int ceil_log2(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("ceil_log2: empty set");
    }
    return n == 1 ? 0 : std::bit_width(n - 1);
}

// ceil(log2(set_size)), clamped to at least one qubit so a one-element set
// still gets a register.
inline int register_width(std::size_t set_size) {
    return std::max(1, ceil_log2(set_size));
}

// Order-preserving compaction onto {0, ..., |values|-1}, ascending.
inline std::map<int, int> rank(const std::set<int>& values) {
    if (values.empty()) {
        throw std::invalid_argument("rank: empty value set");
    }
    std::map<int, int> out;
    int next = 0;
    for (int v : values) {
        out[v] = next++;
    }
    return out;
}

// Value regeneration pass. Iteration 1 keeps original values; later
// iterations rank the surviving originals into a compact range so the value
// register shrinks with the working set.
inline ProblemInstance& gen_values(ProblemInstance& instance) {
    instance.map_v.clear();
    if (instance.iteration == 1) {
        const std::size_t cap = std::size_t{1} << instance.val_qubits;
        for (PairRecord& rec : instance.pairs) {
            if (rec.original_value < 0 || static_cast<std::size_t>(rec.original_value) >= cap) {
                throw std::invalid_argument(
                    "gen_values: original value " + std::to_string(rec.original_value) +
                    " does not fit the " + std::to_string(instance.val_qubits) +
                    "-qubit value register");
            }
            rec.current_value = rec.original_value;
            instance.map_v[rec.original_value] = rec.original_value;
        }
        return instance;
    }
    std::set<int> originals;
    for (const PairRecord& rec : instance.pairs) {
        originals.insert(rec.original_value);
    }
    const auto ranks = rank(originals);
    for (PairRecord& rec : instance.pairs) {
        const int r = ranks.at(rec.original_value);
        rec.current_value = r;
        instance.map_v[rec.original_value] = r;
    }
    return instance;
}

// Index regeneration pass, followed by the value pass. Iteration 1 stamps
// original indexes by position and starts the identity mapping; later
// iterations skip filtered records (current_index == -1, which never comes
// back) and hand out fresh consecutive indexes in encounter order. The
// records are updated in place and the assembled working set is returned.
inline ProblemInstance gen_indexes(std::vector<PairRecord>& records, int iteration) {
    if (iteration < 1) {
        throw std::invalid_argument("gen_indexes: iteration must be >= 1");
    }
    ProblemInstance instance;
    instance.iteration = iteration;
    std::vector<std::size_t> positions;
    int next = 0;
    if (iteration == 1) {
        for (std::size_t pos = 0; pos < records.size(); ++pos) {
            records[pos].original_index = static_cast<int>(pos);
            records[pos].current_index = next;
            instance.map_i[records[pos].original_index] = next;
            positions.push_back(pos);
            ++next;
        }
    } else {
        for (std::size_t pos = 0; pos < records.size(); ++pos) {
            if (!records[pos].alive()) {
                continue;
            }
            records[pos].current_index = next;
            instance.map_i[records[pos].original_index] = next;
            positions.push_back(pos);
            ++next;
        }
    }
    if (positions.empty()) {
        throw std::runtime_error("gen_indexes: no alive records (search degenerated to empty)");
    }
    instance.pairs.reserve(positions.size());
    for (std::size_t pos : positions) {
        instance.pairs.push_back(records[pos]);
    }
    instance.idx_qubits = register_width(instance.pairs.size());
    instance.val_qubits = register_width(instance.pairs.size());
    gen_values(instance);
    for (std::size_t j = 0; j < positions.size(); ++j) {
        records[positions[j]].current_value = instance.pairs[j].current_value;
    }
    return instance;
}

// Fixed bit layout: index block in the high bits, value block in the low bits.
inline BasisCode encode_pair(const PairRecord& record, int idx_qubits, int val_qubits) {
    if (record.current_index < 0 ||
        static_cast<std::uint64_t>(record.current_index) >= (std::uint64_t{1} << idx_qubits)) {
        throw std::out_of_range("encode_pair: current index " +
                                std::to_string(record.current_index) + " exceeds " +
                                std::to_string(idx_qubits) + "-qubit register");
    }
    if (record.current_value < 0 ||
        static_cast<std::uint64_t>(record.current_value) >= (std::uint64_t{1} << val_qubits)) {
        throw std::out_of_range("encode_pair: current value " +
                                std::to_string(record.current_value) + " exceeds " +
                                std::to_string(val_qubits) + "-qubit register");
    }
    return (static_cast<BasisCode>(record.current_index) << val_qubits) |
           static_cast<BasisCode>(record.current_value);
}

inline std::vector<BasisCode> encode_instance(const ProblemInstance& instance) {
    std::vector<BasisCode> codes;
    codes.reserve(instance.pairs.size());
    for (const PairRecord& rec : instance.pairs) {
        codes.push_back(encode_pair(rec, instance.idx_qubits, instance.val_qubits));
    }
    return codes;
}

// Word at rank r becomes the record (index r, value r): the search workload
// is rank-encoded, the word text itself never enters the registers.
inline std::vector<PairRecord> records_from_words(const std::vector<std::string>& words,
                                                  std::size_t size, const std::string& origin) {
    if (size == 0) {
        throw std::invalid_argument("load_wordlist: dataset size must be >= 1");
    }
    if (words.size() < size) {
        throw std::runtime_error("word list " + origin + " has " + std::to_string(words.size()) +
                                 " entries, need " + std::to_string(size));
    }
    std::vector<PairRecord> records;
    records.reserve(size);
    for (std::size_t r = 0; r < size; ++r) {
        const int v = static_cast<int>(r);
        records.push_back(PairRecord{v, v, v, v});
    }
    return records;
}

// Empty path selects the built-in corpus. A missing file falls back to the
// built-in corpus only when asked to; an existing but malformed file is
// always an error.
inline std::vector<PairRecord> load_wordlist(const std::string& path, std::size_t size,
                                             bool fallback_to_builtin = false) {
    if (path.empty()) {
        return records_from_words(builtin_words(), size, "(builtin)");
    }
    if (fallback_to_builtin && !std::ifstream(path)) {
        return records_from_words(builtin_words(), size, "(builtin)");
    }
    return records_from_words(read_wordlist_file(path), size, path);
}

} // namespace iqucs
