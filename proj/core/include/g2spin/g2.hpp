#pragma once

// Nearly parallel G2 data in a fixed frame: the 3-form omega built from the
// 3-Sasakian coframe, its Hodge dual, the distinguished spinor psi with
// omega . psi = -7 psi, and the operator L(sigma) = -*(sigma ^ *omega).

#include <optional>
#include <string>
#include <vector>

#include "g2spin/clifford.hpp"
#include "g2spin/exact_matrix.hpp"
#include "g2spin/exterior.hpp"

namespace g2spin {

/// Contact forms eta_1..3 = e_1..3 and their differentials on a 3-Sasakian 7-manifold.
struct CoframeData {
  Multivector eta1, eta2, eta3;
  Multivector d_eta1, d_eta2, d_eta3;
};

CoframeData sasakian_coframe();

/// 1/2 (eta1 ^ d eta1 - eta2 ^ d eta2 - eta3 ^ d eta3)
Multivector expand_omega3(const CoframeData& coframe);

/// -1/8 (d eta1 ^ d eta1 - d eta2 ^ d eta2 - d eta3 ^ d eta3)
Multivector expand_star_omega3(const CoframeData& coframe);

struct Lemma1Report {
  std::size_t rank = 0;            // rank of (eta, sigma, c) -> (eta + sigma + c) . psi
  std::size_t kernel_dim = 0;
  bool kernel_in_graph = false;    // every kernel vector has c = 0 and eta = L(sigma)
  bool graph_in_kernel = false;    // (L(sigma), sigma, 0) is in the kernel for every basis sigma
  std::optional<std::string> witness;
  bool passed() const { return rank == 8 && kernel_dim == 21 && kernel_in_graph && graph_in_kernel; }
};

class G2Structure {
 public:
  G2Structure(Multivector omega3, Multivector star_omega3, Spinor psi, CliffordRepresentation rep,
              std::vector<std::string> notes);

  const Multivector& omega3() const { return omega3_; }
  const Multivector& star_omega3() const { return star_omega3_; }
  const Spinor& psi() const { return psi_; }
  /// +1 when the standard generators work, -1 when gamma_i had to be negated.
  int orientation_sign() const { return rep_.sign(); }
  const CliffordRepresentation& representation() const { return rep_; }
  const std::vector<std::string>& notes() const { return notes_; }

  /// L(sigma) = -*(sigma ^ *omega) for a 2-form sigma.
  Multivector L(const Multivector& sigma) const;

  /// Matrix of eta -> L(x ^ eta) on 1-forms, for a 1-form x.
  Matrix<Rational> cross_operator(const Multivector& x) const;

  /// (eta + sigma + c) . psi
  Spinor phi(const Multivector& eta, const Multivector& sigma, const Rational& c) const;

  /// The 8 x 29 matrix of phi in the basis (e_1..e_7, e_jk with j<k, 1).
  Matrix<Rational> phi_matrix() const;

  Lemma1Report lemma1_check() const;

 private:
  Multivector omega3_;
  Multivector star_omega3_;
  Spinor psi_;
  CliffordRepresentation rep_;
  std::vector<std::string> notes_;
};

/// Builds the structure from the 3-Sasakian coframe.
///
/// If the -7 eigenspace of rho(omega) is not one-dimensional under `rep`, the
/// generators are negated and the build retried. Throws std::logic_error when
/// neither choice works.
G2Structure build_standard_structure(const CliffordRepresentation& rep = CliffordRepresentation::standard());

/// Process-wide instance built from the standard representation.
const G2Structure& standard_structure();

/// All 2-forms e_j ^ e_k, j < k, in lexicographic order.
std::vector<Multivector> two_form_basis();

/// c with L(d_eta) = c eta, or nullopt if L(d_eta) is not a multiple of eta.
std::optional<Rational> eigen_factor(const G2Structure& g2, const Multivector& eta, const Multivector& d_eta);

struct SasakianRelations {
  Rational factor1, factor2, factor3;  // L(d eta_i) = factor_i eta_i
  bool star_identity = false;          // hodge(omega) equals the d eta ^ d eta expansion
  bool omega_unit_coefficients = false;
};

/// Throws std::logic_error if any L(d eta_i) is not a multiple of eta_i.
SasakianRelations verify_sasakian_relations(const G2Structure& g2 = standard_structure());

}  // namespace g2spin
