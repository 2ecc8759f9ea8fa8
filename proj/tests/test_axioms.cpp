#include "doctest.h"

#include "support.hpp"
#include "tannaka/axioms.hpp"
#include "tannaka/error.hpp"
#include "tannaka/repfun.hpp"

using namespace tannaka;
using axioms::convolve;
using lin::compose;
using lin::Matrix;
using lin::Scalar;
using testing::load;

namespace {

std::size_t unit_index(std::size_t i, std::size_t j) { return i * 2 + j; }

recon::StructureMaps maps_of(const std::string& name) { return load(name)->reconstruction().maps; }

}  // namespace

TEST_CASE("convolution examples on the weak fixture") {
    const auto m = maps_of("weak_pair.json");
    const auto id = Matrix::identity(4);
    Matrix diag(4, 4);
    diag(unit_index(0, 0), unit_index(0, 0)) = Scalar(1);
    diag(unit_index(1, 1), unit_index(1, 1)) = Scalar(1);
    CHECK(convolve(id, id, m) == diag);
    CHECK(convolve(*m.antipode, id, m) == *m.eps_s);
    CHECK(convolve(id, *m.antipode, m) == *m.eps_t);
}

TEST_CASE("eta o eps is a two-sided convolution unit on the trivial fixture") {
    const auto m = maps_of("trivial_n1.json");
    const Matrix unit = compose(m.eta, m.eps);
    const Matrix f = testing::M({{5}});
    CHECK(convolve(f, unit, m) == f);
    CHECK(convolve(unit, f, m) == f);
}

TEST_CASE("property: convolution is associative with unit eta o eps") {
    testing::Gen g(31);
    int models = 0;
    for (const auto& name : testing::corpus()) {
        CAPTURE(name);
        const auto m = maps_of(name);
        if (!axioms::suite_monoid(m).passed() || !axioms::suite_comonoid(m).passed()) continue;
        ++models;
        const std::size_t n = m.eta.rows();
        const Matrix unit = compose(m.eta, m.eps);
        const int trials = n > 4 ? 3 : 10;
        for (int t = 0; t < trials; ++t) {
            const Matrix a = g.matrix(n, n), b = g.matrix(n, n), c = g.matrix(n, n);
            CHECK(convolve(convolve(a, b, m), c, m) == convolve(a, convolve(b, c, m), m));
            CHECK(convolve(a, unit, m) == a);
            CHECK(convolve(unit, a, m) == a);
        }
    }
    CHECK(models >= 7);
}

TEST_CASE("strong fixture passes every suite") {
    const auto m = maps_of("strong_z2.json");
    CHECK(axioms::suite_monoid(m).passed());
    CHECK(axioms::suite_comonoid(m).passed());
    CHECK(axioms::suite_bialgebra_strong(m).passed());
    CHECK(axioms::suite_weak_bialgebra(m).passed());
    CHECK(axioms::suite_hopf(m).passed());
    CHECK(axioms::suite_weak_hopf(m).passed());
}

TEST_CASE("trivial fixture passes every suite") {
    const auto m = maps_of("trivial_n1.json");
    CHECK(axioms::suite_bialgebra_strong(m).passed());
    CHECK(axioms::suite_hopf(m).passed());
    CHECK(axioms::suite_weak_hopf(m).passed());
}

TEST_CASE("weak fixture: weak suites pass, strong ones fail") {
    const auto m = maps_of("weak_pair.json");
    CHECK(axioms::suite_monoid(m).passed());
    CHECK(axioms::suite_comonoid(m).passed());

    const auto b = axioms::suite_bialgebra_strong(m);
    CHECK_FALSE(b.passes("B1"));
    REQUIRE(b.find("B1")->witness.has_value());
    CHECK(b.find("B1")->witness->lhs == Scalar(2));
    CHECK(b.find("B1")->witness->rhs == Scalar(1));
    CHECK_FALSE(b.passes("B2"));
    CHECK(b.passes("B4"));
    // eps(E11 E22) = 0 but eps(E11) eps(E22) = 1
    CHECK_FALSE(b.passes("B3"));

    CHECK(axioms::suite_weak_bialgebra(m).passed());
    const auto h = axioms::suite_hopf(m);
    CHECK_FALSE(h.passes("H-left"));
    CHECK_FALSE(h.passes("H-right"));
    const auto wh = axioms::suite_weak_hopf(m);
    CHECK(wh.passed());
    CHECK(wh.find("WH1")->note == "id * S = eps_t");
}

TEST_CASE("zeroing one product entry breaks the monoid suite") {
    auto m = maps_of("weak_pair.json");
    m.mu(unit_index(0, 0), unit_index(0, 0) * 4 + unit_index(0, 0)) = Scalar(0);  // E11 E11 = 0
    const auto r = axioms::suite_monoid(m);
    CHECK_FALSE(r.passed());
    CHECK_FALSE(r.passes("left unit"));
    CHECK(r.find("left unit")->witness.has_value());
}

TEST_CASE("rescaling eps by 2 breaks WB-c1") {
    auto m = maps_of("weak_pair.json");
    m.eps *= Scalar(2);
    const auto r = axioms::suite_weak_bialgebra(m);
    CHECK_FALSE(r.passes("WB-c1"));
    CHECK(r.passes("WB-mult"));
}

TEST_CASE("replacing S by the identity breaks WH1 at E12") {
    auto m = maps_of("weak_pair.json");
    m.antipode = Matrix::identity(4);
    const auto r = axioms::suite_weak_hopf(m);
    CHECK_FALSE(r.passes("WH1"));
    const auto& w = r.find("WH1")->witness;
    REQUIRE(w.has_value());
    CHECK(w->row == unit_index(0, 0));
    CHECK(w->col == unit_index(0, 1));
    CHECK(w->lhs == Scalar(0));
    CHECK(w->rhs == Scalar(1));
}

TEST_CASE("swapped source and target maps are accepted with a note") {
    auto m = maps_of("weak_pair.json");
    std::swap(m.eps_s, m.eps_t);
    const auto r = axioms::suite_weak_hopf(m);
    CHECK(r.passes("WH1"));
    CHECK(r.passes("WH2"));
    CHECK(r.find("WH1")->note.find("swapped") != std::string::npos);
}

TEST_CASE("hopf suites need an antipode") {
    auto m = maps_of("weak_pair.json");
    m.antipode.reset();
    CHECK_THROWS_AS(axioms::suite_hopf(m), ConstructionError);
    CHECK_THROWS_AS(axioms::suite_weak_hopf(m), ConstructionError);
}

TEST_CASE("zero-dimensional structure passes the monoid and comonoid suites vacuously") {
    recon::StructureMaps m{Matrix(0, 0), Matrix(0, 1), Matrix(0, 0), Matrix(1, 0), {}, {}, {}};
    CHECK(axioms::suite_monoid(m).passed());
    CHECK(axioms::suite_comonoid(m).passed());
}

TEST_CASE("property: implication lattice over the corpus") {
    for (const auto& name : testing::corpus()) {
        CAPTURE(name);
        auto s = load(name);
        const auto& c = s->category();
        const auto& f = s->functor();
        const auto& m = s->reconstruction().maps;
        const bool strong_functor = rep::check_strong(c, f).passed();
        const bool frobenius = rep::check_frobenius(c, f).passed();
        const bool separable = rep::check_separable(c, f).passed();
        const bool bialgebra = axioms::suite_bialgebra_strong(m).passed();
        const bool weak_bialgebra = axioms::suite_weak_bialgebra(m).passed();

        if (bialgebra) CHECK(weak_bialgebra);
        if (frobenius && separable) CHECK(weak_bialgebra);
        if (strong_functor) {
            CHECK(bialgebra);
            CHECK(axioms::suite_monoid(m).passed());
            CHECK(axioms::suite_comonoid(m).passed());
        }
        if (m.antipode) {
            const bool hopf = axioms::suite_hopf(m).passed();
            if (hopf && bialgebra) {
                CHECK(axioms::suite_weak_hopf(m).passed());
                CHECK(*m.eps_s == compose(m.eta, m.eps));
                CHECK(*m.eps_t == compose(m.eta, m.eps));
            }
            if (strong_functor) CHECK(hopf);
        }
        if (frobenius && separable && s->duals() && s->dual_violations().empty()) {
            REQUIRE(m.antipode.has_value());
            CHECK(axioms::suite_weak_hopf(m).passed());
        }
        // B1 holds exactly when e -> Fe -> e is the identity
        const bool unit_round_trip = compose(f.oplax0(), f.lax0()) == Matrix::identity(1);
        CHECK(axioms::suite_bialgebra_strong(m).passes("B1") == unit_round_trip);
    }
}
