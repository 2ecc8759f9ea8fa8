#include "tannaka/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace tannaka {

bool AxiomReport::passed() const {
    return std::all_of(results.begin(), results.end(), [](const AxiomResult& r) { return r.pass; });
}

const AxiomResult* AxiomReport::find(const std::string& name) const {
    for (const auto& r : results)
        if (r.name == name) return &r;
    return nullptr;
}

bool AxiomReport::passes(const std::string& name) const {
    if (const auto* r = find(name)) return r->pass;
    throw std::out_of_range("suite " + suite + " has no axiom " + name);
}

void AxiomCheck::expect_equal(const lin::Matrix& lhs, const lin::Matrix& rhs, const std::string& where) {
    ++result_.cases;
    const auto diff = lin::first_difference(lhs, rhs);
    if (!diff) return;
    ++result_.failures;
    if (result_.pass) result_.witness = Witness{where, diff->row, diff->col, diff->lhs, diff->rhs};
    result_.pass = false;
}

void AxiomCheck::record(bool ok, const std::string& where) {
    ++result_.cases;
    if (ok) return;
    ++result_.failures;
    if (result_.pass && !where.empty()) result_.note = "first failure at " + where;
    result_.pass = false;
}

void AxiomCheck::require(const AxiomReport& sub) {
    ++result_.cases;
    for (const auto& r : sub.results) {
        if (r.pass) continue;
        ++result_.failures;
        if (result_.pass) {
            result_.witness = r.witness;
            if (result_.witness)
                result_.witness->where = r.name + (r.witness->where.empty() ? "" : " at " + r.witness->where);
            result_.note = sub.suite + " law \"" + r.name + "\" fails";
        }
        result_.pass = false;
        return;
    }
}

}  // namespace tannaka
