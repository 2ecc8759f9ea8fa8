#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tannaka/exactlin.hpp"

namespace tannaka {

/// First differing entry between the two sides of a failed equation.
struct Witness {
    std::string where;  // e.g. the object tuple, or empty for a single equation
    std::size_t row = 0;
    std::size_t col = 0;
    lin::Scalar lhs;
    lin::Scalar rhs;
};

struct AxiomResult {
    std::string name;
    bool pass = true;
    std::size_t cases = 0;     // equations checked (object tuples etc.)
    std::size_t failures = 0;  // of which failed
    std::optional<Witness> witness;
    std::string note;
};

struct AxiomReport {
    std::string suite;
    std::vector<AxiomResult> results;

    [[nodiscard]] bool passed() const;
    [[nodiscard]] const AxiomResult* find(const std::string& name) const;
    /// Pass flag of a named axiom; throws std::out_of_range when absent.
    [[nodiscard]] bool passes(const std::string& name) const;
};

/// Accumulates one axiom over many cases, keeping the first failure.
class AxiomCheck {
public:
    explicit AxiomCheck(std::string name) { result_.name = std::move(name); }
    /// Records lhs == rhs for one case. Shapes must agree.
    void expect_equal(const lin::Matrix& lhs, const lin::Matrix& rhs, const std::string& where = {});
    void record(bool ok, const std::string& where = {});
    /// One case that passes iff every law of `sub` does; adopts the first
    /// failing law's witness.
    void require(const AxiomReport& sub);
    void note(std::string text) { result_.note = std::move(text); }
    [[nodiscard]] AxiomResult finish() const { return result_; }

private:
    AxiomResult result_;
};

}  // namespace tannaka
