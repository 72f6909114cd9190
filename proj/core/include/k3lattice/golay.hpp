#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "k3lattice/matrix.hpp"

namespace k3l {

enum class CodeKind { binary, ternary };

/// Length-24 binary word; bit i of `bits` is coordinate i.
struct BinaryWord24 {
    std::uint32_t bits = 0;
    int weight() const;
    std::vector<int> support() const;
    friend bool operator==(const BinaryWord24&, const BinaryWord24&) = default;
};

/// Length-12 ternary word, digits in {0,1,2}.
struct TernaryWord12 {
    std::array<std::uint8_t, 12> digits{};
    int weight() const;
    std::vector<int> support() const;
    friend bool operator==(const TernaryWord12&, const TernaryWord12&) = default;
    friend auto operator<=>(const TernaryWord12&, const TernaryWord12&) = default;
};

/// The binary [24,12,8] or ternary [12,6,6] Golay code, fully enumerated.
/// Construction self-verifies dimension, weight spectrum, self-duality and
/// all-ones membership, and aborts (throws) if any check fails.
class GolayCode {
public:
    static GolayCode binary();
    static GolayCode ternary();

    CodeKind kind() const { return kind_; }
    std::size_t length() const { return kind_ == CodeKind::binary ? 24 : 12; }
    std::size_t size() const;
    const ExactMatrix& generator() const { return generator_; }

    const std::vector<BinaryWord24>& binary_words() const;
    const std::vector<TernaryWord12>& ternary_words() const;
    bool contains(const BinaryWord24& w) const;
    bool contains(const TernaryWord12& w) const;

    /// weight -> number of codewords of that weight
    std::map<int, std::size_t> weight_histogram() const;

    /// Supports of the weight-8 (binary) / weight-6 (ternary) codewords,
    /// deduplicated, in lexicographic order. 759 octads / 132 hexad blocks.
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    /// Every t-subset of coordinates lies in exactly one weight-k support.
    /// Only (t,k) = (5,8) binary and (5,6) ternary are meaningful here.
    bool verify_steiner(int t, int k) const;

    /// All octad supports containing s (binary only, |s| <= 8).
    std::vector<std::vector<int>> octads_through(const std::vector<int>& s) const;

    /// Lexicographically least pair of distinct octad supports meeting in
    /// `meet` points; meet must be one of the realizable sizes {0, 2, 4}.
    std::pair<std::vector<int>, std::vector<int>> find_octad_pair(int meet) const;

    /// Lexicographically least pair of weight-6 codewords whose supports are
    /// disjoint (hence partition the 12 coordinates); each word is the lex
    /// least of the two codewords on its support.
    std::pair<TernaryWord12, TernaryWord12> hexad_pair_partition() const;

private:
    GolayCode() = default;
    void build_blocks(int k);

    CodeKind kind_ = CodeKind::binary;
    ExactMatrix generator_;
    std::vector<BinaryWord24> bwords_;
    std::vector<TernaryWord12> twords_;
    std::set<std::uint32_t> bset_;
    std::set<TernaryWord12> tset_;
    std::vector<std::vector<int>> blocks_;
};

/// Steiner check over an explicit block list (n points, t-subsets covered once).
bool steiner_property(const std::vector<std::vector<int>>& blocks, int t, int n);

}  // namespace k3l
