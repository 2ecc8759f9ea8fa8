#pragma once

// Functors from a finite strict monoidal category into finite-dimensional
// vector spaces, with laxator (m2, m0) and oplaxator (w2, w0) components.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tannaka/exactlin.hpp"
#include "tannaka/fincat.hpp"
#include "tannaka/report.hpp"

namespace tannaka::rep {

using lin::Matrix;

/// Name-level functor data as read from a model document. Matrices for
/// identity morphisms may be omitted; they default to identity matrices.
struct FunctorTables {
    std::map<std::string, std::size_t> dims;
    std::map<std::string, Matrix> morphisms;
    std::map<std::pair<std::string, std::string>, Matrix> lax2;
    Matrix lax0;
    std::map<std::pair<std::string, std::string>, Matrix> oplax2;
    Matrix oplax0;
};

class RepFunctor {
public:
    /// Resolves names and checks every shape. Throws InputError on unknown or
    /// missing entries and on shape mismatches.
    static RepFunctor build(const cat::FinMonCat& c, const FunctorTables& t);

    [[nodiscard]] std::size_t dim(cat::ObjectId x) const { return dims_[x.index]; }
    [[nodiscard]] const Matrix& map(cat::MorphismId f) const { return mor_[f.index]; }
    /// m2_{x,y} : Fx (x) Fy -> F(x (x) y)
    [[nodiscard]] const Matrix& lax2(cat::ObjectId x, cat::ObjectId y) const { return lax2_[x.index * n_ + y.index]; }
    /// m0 : k -> Fe
    [[nodiscard]] const Matrix& lax0() const { return lax0_; }
    /// w2_{x,y} : F(x (x) y) -> Fx (x) Fy
    [[nodiscard]] const Matrix& oplax2(cat::ObjectId x, cat::ObjectId y) const {
        return oplax2_[x.index * n_ + y.index];
    }
    /// w0 : Fe -> k
    [[nodiscard]] const Matrix& oplax0() const { return oplax0_; }

    // Mutators for planting defects; the new matrix must keep the old shape.
    void set_lax2(cat::ObjectId x, cat::ObjectId y, Matrix m);
    void set_lax0(Matrix m);
    void set_oplax2(cat::ObjectId x, cat::ObjectId y, Matrix m);
    void set_oplax0(Matrix m);

private:
    std::size_t n_ = 0;
    std::vector<std::size_t> dims_;
    std::vector<Matrix> mor_;
    std::vector<Matrix> lax2_;
    Matrix lax0_;
    std::vector<Matrix> oplax2_;
    Matrix oplax0_;
};

/// Functoriality and naturality of m2 and w2 in both arguments.
cat::ValidationReport validate_functor(const cat::FinMonCat& c, const RepFunctor& f);

AxiomReport check_monoidal(const cat::FinMonCat& c, const RepFunctor& f);
AxiomReport check_comonoidal(const cat::FinMonCat& c, const RepFunctor& f);
/// Both Frobenius squares, plus the monoidal and comonoidal laws they presuppose.
AxiomReport check_frobenius(const cat::FinMonCat& c, const RepFunctor& f);
/// m2 o w2 = id on every F(x (x) y).
AxiomReport check_separable(const cat::FinMonCat& c, const RepFunctor& f);
/// The four inverse laws between (m2, m0) and (w2, w0), plus the monoidal laws.
AxiomReport check_strong(const cat::FinMonCat& c, const RepFunctor& f);

/// Evaluation and coevaluation carried over to F:
///   evF   = w0 o F(ev_x) o m2_{Lx,x}     : F(Lx) (x) Fx -> k
///   coevF = w2_{x,Lx} o F(coev_x) o m0   : k -> Fx (x) F(Lx)
struct InducedDuality {
    Matrix ev;
    Matrix coev;
};

/// Throws ConstructionError "F does not preserve the dual of x" when either
/// snake equation fails.
InducedDuality induced_duality(const cat::FinMonCat& c, const RepFunctor& f, const cat::DualData& d,
                               cat::ObjectId x);

}  // namespace tannaka::rep
