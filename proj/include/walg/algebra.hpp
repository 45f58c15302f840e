// The realized algebra context for one configuration: canonical f-basis with
// the PBW generator order (non-negative degrees first, m-part last), eagerly
// memoized structure constants, the chi values on m, the nilpotent e, and the
// explicit N x N matrix images used by the oracles.
//
// chi is evaluated both as (1/2) tr(e x) on the matrix images and by the case
// table; construction fails on any mismatch.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "walg/config.hpp"
#include "walg/exact_linalg.hpp"
#include "walg/lie_core.hpp"
#include "walg/pyramid.hpp"

namespace walg {

using GenId = std::uint16_t;

class Algebra {
   public:
    static std::shared_ptr<const Algebra> make(const Config& cfg);
    static std::shared_ptr<const Algebra> make(const Config& cfg, const Pyramid& pyr);

    const Config& config() const { return cfg_; }
    const Pyramid& pyramid() const { return pyr_; }

    std::size_t dim() const { return basis_.size(); }
    std::size_t h_count() const { return h_count_; }
    std::size_t p_count() const { return first_m_; }
    std::size_t m_count() const { return basis_.size() - first_m_; }
    GenId first_m_id() const { return first_m_; }

    const FPair& pair_of(GenId id) const { return basis_[id]; }
    GenId id_of(const FPair& canonical_pair) const;
    int degree_of(GenId id) const { return degree_[id]; }
    bool is_m(GenId id) const { return id >= first_m_; }
    bool is_h(GenId id) const { return id < h_count_; }
    bool is_positive(GenId id) const { return id >= h_count_ && id < first_m_; }

    // Structure constants of [f_id1, f_id2] in canonical coordinates.
    const std::vector<std::pair<GenId, Rational>>& bracket_terms(GenId id1, GenId id2) const {
        return brackets_[static_cast<std::size_t>(id1) * basis_.size() + id2];
    }

    const Rational& chi(GenId id) const { return chi_[id]; }

    const LieElement& e() const { return e_; }
    const RatMatrix& e_matrix() const { return e_matrix_; }
    const RatMatrix& matrix_of(GenId id) const { return mats_[id]; }
    RatMatrix matrix_of(const LieElement& x) const;

   private:
    Algebra(const Config& cfg, const Pyramid& pyr);

    Config cfg_;
    Pyramid pyr_;
    std::vector<FPair> basis_;
    std::map<FPair, GenId> id_;
    std::vector<int> degree_;
    GenId h_count_ = 0;
    GenId first_m_ = 0;
    std::vector<std::vector<std::pair<GenId, Rational>>> brackets_;
    std::vector<Rational> chi_;
    LieElement e_;
    RatMatrix e_matrix_;
    std::vector<RatMatrix> mats_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

// chi = (1/2) tr(e x) extended linearly; throws std::invalid_argument when
// the support of x leaves m.
Rational chi(const Algebra& alg, const LieElement& x);

}  // namespace walg
