#pragma once

// The end E_F = \int_a End(Fa), its canonical actions, discharged forms, and
// the structure maps built on it.
//
// Structure maps are not transcribed entry by entry: each one is the unique
// solution of "discharged form of the map = prescribed composite", solved
// against the (verified injective) discharge map.

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tannaka/exactlin.hpp"
#include "tannaka/fincat.hpp"
#include "tannaka/report.hpp"
#include "tannaka/repfun.hpp"

namespace tannaka::recon {

using cat::FinMonCat;
using cat::ObjectId;
using lin::Matrix;
using rep::RepFunctor;

/// Which factor of s (x) t acts last in the product: left-acts-outer means
/// (s.t)_a = s_a o t_a.
enum class MuOrder { left_acts_outer, right_acts_outer };

class EndObject {
public:
    /// Kernel of all dinaturality equations F(f) t_a - t_b F(f) = 0 inside
    /// the direct sum of the End(Fa), each vectorised row-major.
    static EndObject compute(const FinMonCat& c, const RepFunctor& f);

    [[nodiscard]] std::size_t dim() const { return include_.cols(); }
    [[nodiscard]] std::size_t ambient_dim() const { return include_.rows(); }
    [[nodiscard]] std::size_t object_count() const { return dims_.size(); }
    [[nodiscard]] std::size_t fiber_dim(ObjectId a) const { return dims_[a.index]; }
    /// Columns are the basis families.
    [[nodiscard]] const Matrix& include() const { return include_; }
    /// pi_a : E -> End(Fa), rows indexed row-major by matrix entries.
    [[nodiscard]] Matrix project(ObjectId a) const;
    /// t_a of the k-th basis family, as a dim(Fa) x dim(Fa) matrix.
    [[nodiscard]] Matrix component(std::size_t k, ObjectId a) const;
    /// Component at a of an arbitrary element given by coordinates (dim x 1).
    [[nodiscard]] Matrix component_of(const Matrix& coords, ObjectId a) const;
    /// Coordinates of a family {t_a} in the basis, or nullopt if it is not in E_F.
    [[nodiscard]] std::optional<Matrix> coordinates(std::span<const Matrix> family) const;

private:
    std::vector<std::size_t> dims_;
    std::vector<std::size_t> offsets_;
    Matrix include_;
};

/// alpha_x : E (x) Fx -> Fx, alpha_x(t (x) v) = t_x v.
Matrix action_alpha(const EndObject& e, ObjectId x);

/// Iterated action E^n (x) Fx_1 (x) ... (x) Fx_n -> Fx_1 (x) ... (x) Fx_n,
/// built recursively by moving the last E factor past Fx_1..Fx_{n-1}.
Matrix alpha_n(const EndObject& e, std::span<const ObjectId> xs);

/// Object tuples of length n in lexicographic order; the row blocks of the
/// discharge map follow this order.
std::vector<std::vector<ObjectId>> object_tuples(std::size_t object_count, std::size_t n);

/// D^n : E^{(x)n} -> (+)_{tuples} End(Fx_1 (x) ... (x) Fx_n), pasting each
/// element with alpha^n. Rows are grouped by tuple, each block row-major.
Matrix discharge(const EndObject& e, std::size_t n);

/// Throws ConstructionError "discharge not jointly monic" unless D^n has full
/// column rank.
void require_jointly_monic(const EndObject& e, std::size_t n);

struct StructureMaps {
    Matrix mu;     // E (x) E -> E
    Matrix eta;    // k -> E
    Matrix delta;  // E -> E (x) E
    Matrix eps;    // E -> k
    std::optional<Matrix> antipode;
    std::optional<Matrix> eps_s;
    std::optional<Matrix> eps_t;
};

struct MuEta {
    Matrix mu;
    Matrix eta;
};
MuEta build_mu_eta(const EndObject& e, MuOrder order = MuOrder::left_acts_outer);

struct DeltaEps {
    Matrix delta;
    Matrix eps;
};
/// Delta(t) is the element whose discharged form at (x, y) is
/// w2_{x,y} o t_{x (x) y} o m2_{x,y}; eps(t) = w0 o t_e o m0.
/// Throws ConstructionError when no such element exists.
DeltaEps build_delta_eps(const FinMonCat& c, const EndObject& e, const RepFunctor& f);

/// S(t)_x = (id (x) evF_x) o (id (x) t_{Lx} (x) id) o (coevF_x (x) id).
/// Throws ConstructionError if F does not preserve some dual, or if the
/// resulting family is not dinatural ("antipode leaves E_F").
Matrix build_antipode(const FinMonCat& c, const EndObject& e, const RepFunctor& f, const cat::DualData& d);

struct CounitalMaps {
    Matrix eps_s;  // x -> 1_(1) eps(x 1_(2))
    Matrix eps_t;  // x -> eps(1_(1) x) 1_(2)
};
CounitalMaps build_counital_maps(const StructureMaps& maps);

struct Reconstruction {
    EndObject end;
    StructureMaps maps;
    MuOrder order = MuOrder::left_acts_outer;
    /// Set when duals were supplied but the antipode could not be built.
    std::optional<std::string> antipode_error;
};

/// End, monic checks for n = 1, 2, mu/eta, delta/eps, the antipode (when duals
/// are given) and the counital maps.
Reconstruction reconstruct(const FinMonCat& c, const RepFunctor& f, const cat::DualData* duals,
                           MuOrder order = MuOrder::left_acts_outer);

/// Re-derives each structure map's discharged form from its defining
/// composite and compares; one result per map.
AxiomReport recheck_discharged_forms(const FinMonCat& c, const RepFunctor& f, const cat::DualData* duals,
                                     const Reconstruction& r);

}  // namespace tannaka::recon
