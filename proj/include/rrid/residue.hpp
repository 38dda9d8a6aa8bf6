#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace rrid {

/// A nonempty set of residues in [1, modulus-1]; the allowed parts of a
/// product side.
class ResidueClass {
public:
    /// Residues are reduced mod modulus first, so {±1, ±4} may be given as
    /// {1, -1, 4, -4}. Throws std::invalid_argument on modulus < 2, an empty
    /// set, a residue reducing to 0, or duplicates.
    ResidueClass(std::int64_t modulus, std::vector<std::int64_t> residues) : modulus_(modulus)
    {
        if (modulus < 2) {
            throw std::invalid_argument("modulus must be at least 2");
        }
        if (residues.empty()) {
            throw std::invalid_argument("residue set must be nonempty");
        }
        for (auto r : residues) {
            const std::int64_t reduced = reduce(r);
            if (reduced == 0) {
                throw std::invalid_argument("residue 0 is not allowed");
            }
            residues_.push_back(reduced);
        }
        std::sort(residues_.begin(), residues_.end());
        if (std::adjacent_find(residues_.begin(), residues_.end()) != residues_.end()) {
            throw std::invalid_argument("duplicate residue");
        }
    }

    /// All nonzero residues mod M: the parts not divisible by M.
    static ResidueClass not_divisible_by(std::int64_t modulus)
    {
        std::vector<std::int64_t> residues;
        for (std::int64_t r = 1; r < modulus; ++r) {
            residues.push_back(r);
        }
        return ResidueClass(modulus, std::move(residues));
    }

    std::int64_t modulus() const noexcept { return modulus_; }
    /// Sorted ascending.
    const std::vector<std::int64_t> &residues() const noexcept { return residues_; }

    bool contains(std::int64_t part) const
    {
        return std::binary_search(residues_.begin(), residues_.end(), reduce(part));
    }

    /// "{2,3} mod 5"
    std::string to_string() const
    {
        std::ostringstream out;
        out << '{';
        for (std::size_t i = 0; i < residues_.size(); ++i) {
            out << (i ? "," : "") << residues_[i];
        }
        out << "} mod " << modulus_;
        return out.str();
    }

    friend bool operator==(const ResidueClass &, const ResidueClass &) = default;

private:
    std::int64_t reduce(std::int64_t r) const { return ((r % modulus_) + modulus_) % modulus_; }

    std::int64_t modulus_;
    std::vector<std::int64_t> residues_;
};

} // namespace rrid
