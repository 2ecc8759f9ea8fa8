#pragma once

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tannaka/commands.hpp"
#include "tannaka/exactlin.hpp"

namespace testing {

using tannaka::lin::Matrix;
using tannaka::lin::Scalar;

inline std::string fixture(const std::string& name) { return std::string(TANNAKA_FIXTURE_DIR) + "/" + name; }
inline std::string golden(const std::string& name) { return std::string(TANNAKA_GOLDEN_DIR) + "/" + name; }

inline std::unique_ptr<tannaka::app::Session> load(const std::string& name) {
    return tannaka::app::Session::load(fixture(name));
}

inline Matrix M(const std::vector<std::vector<long>>& rows) { return Matrix::from_rows(rows); }

/// Every model that reconstructs, with or without defects.
inline const std::vector<std::string>& corpus() {
    static const std::vector<std::string> names{
        "strong_z2.json",  "weak_pair.json",        "trivial_n1.json",        "z2_n2.json",
        "z3_strong.json",  "s3_strong.json",        "idempotent.json",        "defect_m0.json",
        "defect_w0.json",  "defect_w2.json",        "defect_m2_scaled.json",  "defect_strong_w0.json",
    };
    return names;
}

/// One block of a "pasting" equation (U (x) id_D) ; act = target, where
/// act : W (x) V -> V with dim V = D, and U : P -> W is unknown.
struct PastingBlock {
    Matrix act;     // D x (dim W * D)
    Matrix target;  // D x (P * D)
    std::size_t fibre = 0;
};

/// Solves for U from all blocks jointly. Empty when the blocks do not
/// determine a unique U.
inline std::optional<Matrix> recover_through_action(const std::vector<PastingBlock>& blocks) {
    if (blocks.empty()) return std::nullopt;
    const std::size_t d0 = blocks[0].fibre;
    const std::size_t w = d0 == 0 ? 0 : blocks[0].act.cols() / d0;
    const std::size_t p = d0 == 0 ? 0 : blocks[0].target.cols() / d0;
    std::size_t rows = 0;
    for (const auto& b : blocks) rows += b.fibre * b.fibre;
    Matrix a(rows, w), rhs(rows, p);
    std::size_t r = 0;
    for (const auto& b : blocks) {
        const std::size_t d = b.fibre;
        for (std::size_t v = 0; v < d; ++v)
            for (std::size_t x = 0; x < d; ++x, ++r) {
                for (std::size_t k = 0; k < w; ++k) a(r, k) = b.act(v, k * d + x);
                for (std::size_t q = 0; q < p; ++q) rhs(r, q) = b.target(v, q * d + x);
            }
    }
    if (tannaka::lin::rank(a) != w) return std::nullopt;
    return tannaka::lin::solve(a, rhs);
}

/// Small random rationals: numerators in [-3, 3], denominators in [1, 3],
/// about a third of the entries zero.
class Gen {
public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    Scalar scalar() {
        if (pick(0, 2) == 0) return Scalar(0);
        return Scalar(pick(-3, 3), pick(1, 3));
    }
    Matrix matrix(std::size_t rows, std::size_t cols) {
        Matrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar();
        return m;
    }
    long pick(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    std::size_t size(std::size_t lo, std::size_t hi) {
        return static_cast<std::size_t>(pick(static_cast<long>(lo), static_cast<long>(hi)));
    }
    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
};

}  // namespace testing
