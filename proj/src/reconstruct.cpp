#include "tannaka/reconstruct.hpp"

#include <array>
#include <numeric>

#include "tannaka/error.hpp"

namespace tannaka::recon {

using lin::compose;
using lin::kronecker;
using lin::Scalar;

namespace {

Matrix id(std::size_t n) { return Matrix::identity(n); }

Matrix kron3(const Matrix& a, const Matrix& b, const Matrix& c) { return kronecker(kronecker(a, b), c); }

std::size_t power(std::size_t base, std::size_t exp) {
    std::size_t out = 1;
    for (std::size_t i = 0; i < exp; ++i) out *= base;
    return out;
}

// Discharged form of every basis element of E^n, given the iterated action
// over one tuple with total fibre dimension dx.
void paste_block(const Matrix& action, std::size_t basis_count, std::size_t dx, Matrix& out, std::size_t row_offset) {
    for (std::size_t k = 0; k < basis_count; ++k)
        for (std::size_t r = 0; r < dx; ++r)
            for (std::size_t c = 0; c < dx; ++c) out(row_offset + r * dx + c, k) = action(r, k * dx + c);
}

std::string tuple_name(const FinMonCat& c, std::span<const ObjectId> xs) {
    std::string s = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + c.object_name(xs[i]);
    return s + ")";
}

}  // namespace

EndObject EndObject::compute(const FinMonCat& c, const RepFunctor& f) {
    EndObject e;
    std::size_t ambient = 0;
    for (auto a : c.objects()) {
        e.dims_.push_back(f.dim(a));
        e.offsets_.push_back(ambient);
        ambient += f.dim(a) * f.dim(a);
    }
    std::size_t rows = 0;
    for (auto g : c.morphisms())
        if (!c.is_identity(g)) rows += f.dim(c.morphism(g).dst) * f.dim(c.morphism(g).src);
    Matrix constraints(rows, ambient);
    std::size_t row = 0;
    for (auto g : c.morphisms()) {
        if (c.is_identity(g)) continue;
        const auto a = c.morphism(g).src;
        const auto b = c.morphism(g).dst;
        const std::size_t da = f.dim(a);
        const std::size_t db = f.dim(b);
        const Matrix& fg = f.map(g);
        // (F(g) t_a - t_b F(g))[r, col] = 0
        for (std::size_t r = 0; r < db; ++r)
            for (std::size_t col = 0; col < da; ++col, ++row) {
                for (std::size_t k = 0; k < da; ++k) constraints(row, e.offsets_[a.index] + k * da + col) += fg(r, k);
                for (std::size_t k = 0; k < db; ++k)
                    constraints(row, e.offsets_[b.index] + r * db + k) -= fg(k, col);
            }
    }
    const auto basis = lin::kernel_basis(constraints);
    e.include_ = basis.empty() ? Matrix(ambient, 0) : lin::hstack(basis);
    return e;
}

Matrix EndObject::project(ObjectId a) const {
    const std::size_t d = dims_[a.index];
    Matrix p(d * d, dim());
    for (std::size_t r = 0; r < d * d; ++r)
        for (std::size_t k = 0; k < dim(); ++k) p(r, k) = include_(offsets_[a.index] + r, k);
    return p;
}

Matrix EndObject::component(std::size_t k, ObjectId a) const {
    const std::size_t d = dims_[a.index];
    Matrix t(d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) t(r, c) = include_(offsets_[a.index] + r * d + c, k);
    return t;
}

Matrix EndObject::component_of(const Matrix& coords, ObjectId a) const {
    const std::size_t d = dims_[a.index];
    const Matrix flat = compose(project(a), coords);
    Matrix t(d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) t(r, c) = flat(r * d + c, 0);
    return t;
}

std::optional<Matrix> EndObject::coordinates(std::span<const Matrix> family) const {
    if (family.size() != dims_.size()) throw DimensionError("family has the wrong number of components");
    Matrix flat(ambient_dim(), 1);
    for (std::size_t a = 0; a < dims_.size(); ++a) {
        const std::size_t d = dims_[a];
        if (family[a].rows() != d || family[a].cols() != d)
            throw DimensionError("family component " + std::to_string(a) + " is " + family[a].shape());
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) flat(offsets_[a] + r * d + c, 0) = family[a](r, c);
    }
    return lin::solve(include_, flat);
}

Matrix action_alpha(const EndObject& e, ObjectId x) {
    const std::size_t d = e.fiber_dim(x);
    const Matrix p = e.project(x);
    Matrix alpha(d, e.dim() * d);
    for (std::size_t k = 0; k < e.dim(); ++k)
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) alpha(r, k * d + c) = p(r * d + c, k);
    return alpha;
}

Matrix alpha_n(const EndObject& e, std::span<const ObjectId> xs) {
    if (xs.empty()) throw DimensionError("alpha_n needs at least one object");
    Matrix acc = action_alpha(e, xs[0]);
    std::size_t fibres = e.fiber_dim(xs[0]);
    for (std::size_t i = 1; i < xs.size(); ++i) {
        const std::size_t dn = e.fiber_dim(xs[i]);
        // E^{i} (x) E (x) X_{<i} (x) X_i  ->  E^{i} (x) X_{<i} (x) E (x) X_i
        const std::array<std::size_t, 4> perm{0, 2, 1, 3};
        const std::array<std::size_t, 4> dims{power(e.dim(), i), e.dim(), fibres, dn};
        acc = lin::permute_columns(kronecker(acc, action_alpha(e, xs[i])), perm, dims);
        fibres *= dn;
    }
    return acc;
}

std::vector<std::vector<ObjectId>> object_tuples(std::size_t object_count, std::size_t n) {
    std::vector<std::vector<ObjectId>> out;
    const std::size_t total = power(object_count, n);
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::vector<ObjectId> t(n);
        std::size_t rem = flat;
        for (std::size_t i = n; i-- > 0;) {
            t[i] = ObjectId{rem % object_count};
            rem /= object_count;
        }
        out.push_back(std::move(t));
    }
    return out;
}

Matrix discharge(const EndObject& e, std::size_t n) {
    const auto tuples = object_tuples(e.object_count(), n);
    std::size_t rows = 0;
    for (const auto& t : tuples) {
        std::size_t dx = 1;
        for (auto x : t) dx *= e.fiber_dim(x);
        rows += dx * dx;
    }
    const std::size_t cols = power(e.dim(), n);
    Matrix d(rows, cols);
    std::size_t offset = 0;
    for (const auto& t : tuples) {
        std::size_t dx = 1;
        for (auto x : t) dx *= e.fiber_dim(x);
        paste_block(alpha_n(e, t), cols, dx, d, offset);
        offset += dx * dx;
    }
    return d;
}

void require_jointly_monic(const EndObject& e, std::size_t n) {
    const Matrix d = discharge(e, n);
    const std::size_t r = lin::rank(d);
    if (r != d.cols())
        throw ConstructionError("discharge not jointly monic: D^" + std::to_string(n) + " has rank " +
                                std::to_string(r) + " on a space of dimension " + std::to_string(d.cols()));
}

MuEta build_mu_eta(const EndObject& e, MuOrder order) {
    const std::size_t n = e.dim();
    const Matrix d1 = discharge(e, 1);
    // Discharged form of the act-twice composite alpha o (id (x) alpha).
    Matrix rhs(d1.rows(), n * n);
    std::size_t offset = 0;
    for (std::size_t a = 0; a < e.object_count(); ++a) {
        const ObjectId x{a};
        const std::size_t dx = e.fiber_dim(x);
        const Matrix alpha = action_alpha(e, x);
        Matrix twice = compose(alpha, kronecker(id(n), alpha));
        if (order == MuOrder::right_acts_outer) twice = compose(twice, kronecker(lin::swap_matrix(n, n), id(dx)));
        paste_block(twice, n * n, dx, rhs, offset);
        offset += dx * dx;
    }
    auto mu = lin::solve(d1, rhs);
    if (!mu) throw ConstructionError("E_F not closed under composition");

    std::vector<Matrix> ones;
    for (std::size_t a = 0; a < e.object_count(); ++a) ones.push_back(id(e.fiber_dim(ObjectId{a})));
    auto eta = e.coordinates(ones);
    if (!eta) throw ConstructionError("identity family is not in E_F");
    return {std::move(*mu), std::move(*eta)};
}

DeltaEps build_delta_eps(const FinMonCat& c, const EndObject& e, const RepFunctor& f) {
    const std::size_t n = e.dim();
    const Matrix d2 = discharge(e, 2);
    const auto pairs = object_tuples(e.object_count(), 2);
    Matrix rhs(d2.rows(), n);
    std::vector<std::size_t> block_start;
    std::size_t offset = 0;
    for (const auto& p : pairs) {
        const auto x = p[0];
        const auto y = p[1];
        const auto xy = c.tensor(x, y);
        const std::size_t dxy = f.dim(x) * f.dim(y);
        block_start.push_back(offset);
        for (std::size_t k = 0; k < n; ++k) {
            const Matrix block = compose(f.oplax2(x, y), compose(e.component(k, xy), f.lax2(x, y)));
            for (std::size_t r = 0; r < dxy; ++r)
                for (std::size_t col = 0; col < dxy; ++col) rhs(offset + r * dxy + col, k) = block(r, col);
        }
        offset += dxy * dxy;
    }
    auto delta = lin::solve(d2, rhs);
    if (!delta) {
        // Locate the first pair whose constraint makes the system inconsistent.
        std::string where = "?";
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            const std::size_t end = i + 1 < pairs.size() ? block_start[i + 1] : d2.rows();
            Matrix a(end, d2.cols());
            Matrix b(end, n);
            for (std::size_t r = 0; r < end; ++r) {
                for (std::size_t col = 0; col < d2.cols(); ++col) a(r, col) = d2(r, col);
                for (std::size_t col = 0; col < n; ++col) b(r, col) = rhs(r, col);
            }
            if (!lin::solve(a, b)) {
                where = tuple_name(c, pairs[i]);
                break;
            }
        }
        throw ConstructionError("comultiplication does not exist for this functor: first unrepresentable pair " + where);
    }
    Matrix eps(1, n);
    const auto unit = c.unit();
    for (std::size_t k = 0; k < n; ++k)
        eps(0, k) = compose(f.oplax0(), compose(e.component(k, unit), f.lax0()))(0, 0);
    return {std::move(*delta), std::move(eps)};
}

Matrix build_antipode(const FinMonCat& c, const EndObject& e, const RepFunctor& f, const cat::DualData& d) {
    std::vector<rep::InducedDuality> duality;
    for (auto x : c.objects()) duality.push_back(rep::induced_duality(c, f, d, x));
    const std::size_t n = e.dim();
    Matrix s(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<Matrix> family;
        for (auto x : c.objects()) {
            const auto& du = duality[x.index];
            const std::size_t dx = f.dim(x);
            const Matrix t = e.component(k, d.dual(x));
            family.push_back(compose(kronecker(id(dx), du.ev),
                                     compose(kron3(id(dx), t, id(dx)), kronecker(du.coev, id(dx)))));
        }
        auto coords = e.coordinates(family);
        if (!coords) {
            std::string witness = "?";
            for (auto g : c.morphisms()) {
                const auto& m = c.morphism(g);
                if (compose(f.map(g), family[m.src.index]) != compose(family[m.dst.index], f.map(g))) {
                    witness = c.object_name(m.src) + " (morphism " + m.name + ")";
                    break;
                }
            }
            throw ConstructionError("antipode leaves E_F at object " + witness);
        }
        for (std::size_t r = 0; r < n; ++r) s(r, k) = (*coords)(r, 0);
    }
    return s;
}

CounitalMaps build_counital_maps(const StructureMaps& m) {
    const std::size_t n = m.eta.rows();
    const Matrix unit_delta = compose(m.delta, m.eta);  // 1_(1) (x) 1_(2)
    const std::array<std::size_t, 3> dims{n, n, n};
    // eps_t: x -> 1_(1) (x) 1_(2) (x) x -> 1_(1) (x) x (x) 1_(2) -> eps(1_(1) x) 1_(2)
    const std::array<std::size_t, 3> swap_last{0, 2, 1};
    Matrix eps_t = kronecker(unit_delta, id(n));
    eps_t = compose(lin::permutation_matrix(swap_last, dims), eps_t);
    eps_t = compose(kronecker(m.mu, id(n)), eps_t);
    eps_t = compose(kronecker(m.eps, id(n)), eps_t);
    // eps_s: x -> x (x) 1_(1) (x) 1_(2) -> 1_(1) (x) x (x) 1_(2) -> 1_(1) eps(x 1_(2))
    const std::array<std::size_t, 3> swap_first{1, 0, 2};
    Matrix eps_s = kronecker(id(n), unit_delta);
    eps_s = compose(lin::permutation_matrix(swap_first, dims), eps_s);
    eps_s = compose(kronecker(id(n), m.mu), eps_s);
    eps_s = compose(kronecker(id(n), m.eps), eps_s);
    return {std::move(eps_s), std::move(eps_t)};
}

Reconstruction reconstruct(const FinMonCat& c, const RepFunctor& f, const cat::DualData* duals, MuOrder order) {
    Reconstruction r{EndObject::compute(c, f), {}, order, std::nullopt};
    require_jointly_monic(r.end, 1);
    require_jointly_monic(r.end, 2);
    auto [mu, eta] = build_mu_eta(r.end, order);
    r.maps.mu = std::move(mu);
    r.maps.eta = std::move(eta);
    auto [delta, eps] = build_delta_eps(c, r.end, f);
    r.maps.delta = std::move(delta);
    r.maps.eps = std::move(eps);
    if (duals) {
        try {
            r.maps.antipode = build_antipode(c, r.end, f, *duals);
        } catch (const ConstructionError& err) {
            r.antipode_error = err.what();
        }
    }
    auto counital = build_counital_maps(r.maps);
    r.maps.eps_s = std::move(counital.eps_s);
    r.maps.eps_t = std::move(counital.eps_t);
    return r;
}

AxiomReport recheck_discharged_forms(const FinMonCat& c, const RepFunctor& f, const cat::DualData* duals,
                                     const Reconstruction& r) {
    const auto& e = r.end;
    const auto& m = r.maps;
    const std::size_t n = e.dim();
    AxiomCheck mu("mu"), eta("eta"), delta("delta"), eps("eps"), antipode("antipode"), eps_s("eps_s"),
        eps_t("eps_t");
    for (auto x : c.objects()) {
        const std::size_t dx = f.dim(x);
        const Matrix alpha = action_alpha(e, x);
        Matrix twice = compose(alpha, kronecker(id(n), alpha));
        if (r.order == MuOrder::right_acts_outer) twice = compose(twice, kronecker(lin::swap_matrix(n, n), id(dx)));
        mu.expect_equal(compose(alpha, kronecker(m.mu, id(dx))), twice, c.object_name(x));
        eta.expect_equal(compose(alpha, kronecker(m.eta, id(dx))), id(dx), c.object_name(x));
        if (m.antipode && duals) {
            const auto du = rep::induced_duality(c, f, *duals, x);
            const auto lx = duals->dual(x);
            const std::size_t dl = f.dim(lx);
            Matrix rhs = kron3(id(n), du.coev, id(dx));
            rhs = compose(kron3(lin::swap_matrix(n, dx), id(dl), id(dx)), rhs);
            rhs = compose(kron3(id(dx), action_alpha(e, lx), id(dx)), rhs);
            rhs = compose(kronecker(id(dx), du.ev), rhs);
            antipode.expect_equal(compose(alpha, kronecker(*m.antipode, id(dx))), rhs, c.object_name(x));
        }
    }
    for (auto x : c.objects())
        for (auto y : c.objects()) {
            const std::array<ObjectId, 2> xs{x, y};
            const std::size_t dxy = f.dim(x) * f.dim(y);
            const Matrix lhs = compose(alpha_n(e, xs), kronecker(m.delta, id(dxy)));
            const Matrix rhs =
                compose(f.oplax2(x, y), compose(action_alpha(e, c.tensor(x, y)), kronecker(id(n), f.lax2(x, y))));
            delta.expect_equal(lhs, rhs, tuple_name(c, xs));
        }
    eps.expect_equal(m.eps, compose(f.oplax0(), compose(action_alpha(e, c.unit()), kronecker(id(n), f.lax0()))));

    // Counital maps, element by element from the structure constants.
    const Matrix unit_delta = compose(m.delta, m.eta);
    Matrix want_t(n, n), want_s(n, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Scalar& cij = unit_delta(i * n + j, 0);
                if (cij.is_zero()) continue;
                Scalar et, es;
                for (std::size_t l = 0; l < n; ++l) {
                    et += m.eps(0, l) * m.mu(l, i * n + k);
                    es += m.eps(0, l) * m.mu(l, k * n + j);
                }
                want_t(j, k) += cij * et;
                want_s(i, k) += cij * es;
            }
    if (m.eps_t) eps_t.expect_equal(*m.eps_t, want_t);
    if (m.eps_s) eps_s.expect_equal(*m.eps_s, want_s);

    AxiomReport report{"discharge", {mu.finish(), eta.finish(), delta.finish(), eps.finish()}};
    if (m.antipode) report.results.push_back(antipode.finish());
    if (m.eps_s) report.results.push_back(eps_s.finish());
    if (m.eps_t) report.results.push_back(eps_t.finish());
    return report;
}

}  // namespace tannaka::recon
