#include "k3lattice/golay.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace k3l {

namespace {

// Generator polynomial of the [23,12,7] quadratic-residue code over GF(2):
// x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1 (coefficients by ascending degree).
constexpr int kBinQR[12] = {1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1};

// Generator polynomial of the [11,6,5] quadratic-residue code over GF(3):
// x^5 + x^4 + 2x^3 + x^2 + 2.
constexpr int kTernQR[6] = {2, 0, 1, 2, 1, 1};

std::vector<int> mask_support(std::uint32_t m) {
    std::vector<int> s;
    for (int i = 0; i < 24; ++i)
        if (m >> i & 1u) s.push_back(i);
    return s;
}

[[noreturn]] void fail(const std::string& what) {
    throw std::runtime_error("GolayCode self-check failed: " + what);
}

}  // namespace

int BinaryWord24::weight() const { return std::popcount(bits & 0xffffffu); }

std::vector<int> BinaryWord24::support() const { return mask_support(bits); }

int TernaryWord12::weight() const {
    int w = 0;
    for (auto d : digits) w += d != 0;
    return w;
}

std::vector<int> TernaryWord12::support() const {
    std::vector<int> s;
    for (int i = 0; i < 12; ++i)
        if (digits[i]) s.push_back(i);
    return s;
}

GolayCode GolayCode::binary() {
    GolayCode c;
    c.kind_ = CodeKind::binary;

    // Twelve cyclic shifts of the QR generator polynomial, each extended by an
    // overall parity bit at coordinate 23.
    std::array<std::uint32_t, 12> gen{};
    c.generator_ = ExactMatrix(12, 24);
    for (int s = 0; s < 12; ++s) {
        std::uint32_t r = 0;
        for (int d = 0; d < 12; ++d)
            if (kBinQR[d]) r |= 1u << ((d + s) % 23);
        if (std::popcount(r) % 2) r |= 1u << 23;
        gen[s] = r;
        for (int j = 0; j < 24; ++j) c.generator_.at(s, j) = Rational((r >> j & 1u) ? 1 : 0);
    }

    c.bwords_.reserve(4096);
    for (std::uint32_t m = 0; m < 4096; ++m) {
        std::uint32_t w = 0;
        for (int i = 0; i < 12; ++i)
            if (m >> i & 1u) w ^= gen[i];
        c.bwords_.push_back({w});
        c.bset_.insert(w);
    }

    if (c.bset_.size() != 4096) fail("binary dimension is not 12");
    auto hist = c.weight_histogram();
    const std::map<int, std::size_t> want = {{0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}};
    if (hist != want) fail("binary weight spectrum");
    if (!c.bset_.count(0xffffffu)) fail("all-ones word missing");
    for (int i = 0; i < 12; ++i)
        for (int j = i; j < 12; ++j)
            if (std::popcount(gen[i] & gen[j]) % 2) fail("binary code not self-orthogonal");

    c.build_blocks(8);
    return c;
}

GolayCode GolayCode::ternary() {
    GolayCode c;
    c.kind_ = CodeKind::ternary;

    std::array<TernaryWord12, 6> gen{};
    c.generator_ = ExactMatrix(6, 12);
    for (int s = 0; s < 6; ++s) {
        TernaryWord12 r{};
        int total = 0;
        for (int d = 0; d < 6; ++d) {
            int pos = (d + s) % 11;
            r.digits[pos] = static_cast<std::uint8_t>((r.digits[pos] + kTernQR[d]) % 3);
        }
        for (int i = 0; i < 11; ++i) total += r.digits[i];
        r.digits[11] = static_cast<std::uint8_t>((3 - total % 3) % 3);  // zero-sum extension
        gen[s] = r;
        for (int j = 0; j < 12; ++j) c.generator_.at(s, j) = Rational(static_cast<int>(r.digits[j]));
    }

    c.twords_.reserve(729);
    std::array<int, 6> coef{};
    for (int m = 0; m < 729; ++m) {
        int t = m;
        for (int i = 0; i < 6; ++i) {
            coef[i] = t % 3;
            t /= 3;
        }
        TernaryWord12 w{};
        for (int i = 0; i < 6; ++i)
            if (coef[i])
                for (int j = 0; j < 12; ++j)
                    w.digits[j] = static_cast<std::uint8_t>((w.digits[j] + coef[i] * gen[i].digits[j]) % 3);
        c.twords_.push_back(w);
        c.tset_.insert(w);
    }

    if (c.tset_.size() != 729) fail("ternary dimension is not 6");
    auto hist = c.weight_histogram();
    const std::map<int, std::size_t> want = {{0, 1}, {6, 264}, {9, 440}, {12, 24}};
    if (hist != want) fail("ternary weight spectrum");
    TernaryWord12 ones{};
    ones.digits.fill(1);
    if (!c.tset_.count(ones)) fail("all-ones word missing");
    for (int i = 0; i < 6; ++i)
        for (int j = i; j < 6; ++j) {
            int dot = 0;
            for (int p = 0; p < 12; ++p) dot += gen[i].digits[p] * gen[j].digits[p];
            if (dot % 3) fail("ternary code not self-orthogonal");
        }

    c.build_blocks(6);
    return c;
}

void GolayCode::build_blocks(int k) {
    std::set<std::vector<int>> supports;
    if (kind_ == CodeKind::binary) {
        for (const auto& w : bwords_)
            if (w.weight() == k) supports.insert(w.support());
    } else {
        for (const auto& w : twords_)
            if (w.weight() == k) supports.insert(w.support());
    }
    blocks_.assign(supports.begin(), supports.end());
}

std::size_t GolayCode::size() const {
    return kind_ == CodeKind::binary ? bwords_.size() : twords_.size();
}

const std::vector<BinaryWord24>& GolayCode::binary_words() const {
    if (kind_ != CodeKind::binary) throw std::invalid_argument("not a binary code");
    return bwords_;
}

const std::vector<TernaryWord12>& GolayCode::ternary_words() const {
    if (kind_ != CodeKind::ternary) throw std::invalid_argument("not a ternary code");
    return twords_;
}

bool GolayCode::contains(const BinaryWord24& w) const {
    if (kind_ != CodeKind::binary) throw std::invalid_argument("not a binary code");
    return bset_.count(w.bits & 0xffffffu) != 0;
}

bool GolayCode::contains(const TernaryWord12& w) const {
    if (kind_ != CodeKind::ternary) throw std::invalid_argument("not a ternary code");
    return tset_.count(w) != 0;
}

std::map<int, std::size_t> GolayCode::weight_histogram() const {
    std::map<int, std::size_t> h;
    if (kind_ == CodeKind::binary)
        for (const auto& w : bwords_) ++h[w.weight()];
    else
        for (const auto& w : twords_) ++h[w.weight()];
    return h;
}

bool steiner_property(const std::vector<std::vector<int>>& blocks, int t, int n) {
    // Combinations are ranked in the combinadic (colex) order so coverage can
    // be tallied in a flat array of size C(n, t).
    std::vector<std::vector<long long>> binom(n + 1, std::vector<long long>(t + 1, 0));
    for (int i = 0; i <= n; ++i) {
        binom[i][0] = 1;
        for (int j = 1; j <= std::min(i, t); ++j)
            binom[i][j] = binom[i - 1][j - 1] + (i - 1 >= j ? binom[i - 1][j] : 0);
    }
    auto rank = [&](const std::vector<int>& comb) {
        long long r = 0;
        for (int i = 0; i < t; ++i) r += binom[comb[i]][i + 1];
        return r;
    };
    std::vector<int> count(static_cast<std::size_t>(binom[n][t]), 0);

    std::vector<int> idx(t);
    for (const auto& block : blocks) {
        const int k = static_cast<int>(block.size());
        if (k < t) return false;
        for (int i = 0; i < t; ++i) idx[i] = i;
        for (;;) {
            std::vector<int> comb(t);
            for (int i = 0; i < t; ++i) comb[i] = block[idx[i]];
            ++count[rank(comb)];
            int p = t - 1;
            while (p >= 0 && idx[p] == k - t + p) --p;
            if (p < 0) break;
            ++idx[p];
            for (int i = p + 1; i < t; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    return std::all_of(count.begin(), count.end(), [](int c) { return c == 1; });
}

bool GolayCode::verify_steiner(int t, int k) const {
    const bool bin = kind_ == CodeKind::binary;
    if (!((bin && t == 5 && k == 8) || (!bin && t == 5 && k == 6)))
        throw std::invalid_argument("verify_steiner: parameters do not match the code");
    return steiner_property(blocks_, t, static_cast<int>(length()));
}

std::vector<std::vector<int>> GolayCode::octads_through(const std::vector<int>& s) const {
    if (kind_ != CodeKind::binary) throw std::invalid_argument("octads_through: binary code required");
    if (s.size() > 8) throw std::invalid_argument("octads_through: |s| <= 8 required");
    std::vector<std::vector<int>> out;
    for (const auto& o : blocks_) {
        bool inside = std::includes(o.begin(), o.end(), s.begin(), s.end());
        if (inside) out.push_back(o);
    }
    return out;
}

std::pair<std::vector<int>, std::vector<int>> GolayCode::find_octad_pair(int meet) const {
    if (kind_ != CodeKind::binary) throw std::invalid_argument("find_octad_pair: binary code required");
    if (meet != 0 && meet != 2 && meet != 4)
        throw std::invalid_argument("find_octad_pair: octad supports meet in 0, 2 or 4 points");
    std::vector<int> tmp;
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        for (std::size_t j = i + 1; j < blocks_.size(); ++j) {
            tmp.clear();
            std::set_intersection(blocks_[i].begin(), blocks_[i].end(), blocks_[j].begin(),
                                  blocks_[j].end(), std::back_inserter(tmp));
            if (static_cast<int>(tmp.size()) == meet) return {blocks_[i], blocks_[j]};
        }
    throw std::runtime_error("find_octad_pair: no pair found");
}

std::pair<TernaryWord12, TernaryWord12> GolayCode::hexad_pair_partition() const {
    if (kind_ != CodeKind::ternary) throw std::invalid_argument("hexad_pair_partition: ternary code required");
    auto word_on = [&](const std::vector<int>& supp) {
        TernaryWord12 best{};
        bool found = false;
        for (const auto& w : twords_)
            if (w.support() == supp && (!found || w < best)) {
                best = w;
                found = true;
            }
        return best;
    };
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        for (std::size_t j = i + 1; j < blocks_.size(); ++j) {
            std::vector<int> meet;
            std::set_intersection(blocks_[i].begin(), blocks_[i].end(), blocks_[j].begin(),
                                  blocks_[j].end(), std::back_inserter(meet));
            if (meet.empty()) return {word_on(blocks_[i]), word_on(blocks_[j])};
        }
    throw std::runtime_error("hexad_pair_partition: no disjoint hexad pair");
}

}  // namespace k3l
