#pragma once

#include <vector>

#include "dnr/report.hpp"
#include "dnr/sparse.hpp"

namespace dnr {

// index reflection: bar(j) = 2n+1-j
int bar_index(int j, int n);

// primed index a' in half-integer units: returns 2a' (a+1/2 for a <= n,
// a-1/2 for a > n, doubled to stay integral)
int prime_twice(int a, int n);

// underline(a) = a for a <= n, bar(a) for a > n; always lands in [1, n]
int underline_index(int a, int n);

struct CartanMatrix {
    int n = 0;
    std::vector<std::vector<int>> a;  // (n+1) x (n+1), indices 0..n
};

// Generalized Cartan matrix of the affine diagram: nodes 0 and 1 attach to
// node 2, a chain runs 2..n-2, and nodes n-1, n both attach to node n-2.
CartanMatrix cartan_matrix(int n);

enum class GenKind { XPlus, XMinus, H };

// The 2n-dimensional vector representation: images of x_i^+, x_i^-, h_i for
// i = 0..n as exact sparse matrices. h images are integer diagonal.
class VectorRep {
public:
    explicit VectorRep(int n);

    int n() const { return n_; }
    int dim() const { return 2 * n_; }

    const PolyMatrix& xplus(int i) const { return xp_.at(check(i)); }
    const PolyMatrix& xminus(int i) const { return xm_.at(check(i)); }
    const PolyMatrix& h(int i) const { return h_.at(check(i)); }
    const PolyMatrix& generator(GenKind k, int i) const {
        return k == GenKind::XPlus ? xplus(i) : (k == GenKind::XMinus ? xminus(i) : h(i));
    }

    // h_i eigenvalue on basis vector b (1-based); always in {-1, 0, 1} here
    int h_eigenvalue(int i, int b) const;

    // image under the rescaling automorphism x_i^± -> sigma_i^{±1} x_i^±
    VectorRep rescaled(const std::vector<LaurentPoly>& sigma) const;

private:
    int check(int i) const;
    VectorRep(int n, bool);  // uninitialized shell for rescaled()

    int n_;
    std::vector<PolyMatrix> xp_, xm_, h_;
};

// diagonal q_i^{h_i} (half=false) or q_i^{h_i/2} (half=true), entries s^{2m}
// or s^m per h_i eigenvalue m
PolyMatrix q_power_h(const VectorRep& rep, int i, bool half);

// diagonal s^{k·m} per h_i eigenvalue m (k = ±1 gives q^{±h_i/2}, k = ±2
// gives q^{±h_i})
PolyMatrix s_power_h(const VectorRep& rep, int i, int k);

// pi_arg(x_i^±): the node-0 images are scaled by arg^{±1}, everything else is
// untouched; arg must be a unit monomial
PolyMatrix spectral_rep(const VectorRep& rep, GenKind kind, int i, const LaurentPoly& arg);

// (pi_left ⊗ pi_right)(Delta(Q)) for Q one of h_i, x_i^±
PolyMatrix coproduct_image(const VectorRep& rep, GenKind kind, int i, const LaurentPoly& left_arg,
                           const LaurentPoly& right_arg);

// Exact verification of the defining relations: commutators, the
// fraction-free q-commutator (q - q^{-1})[x_i^+, x_j^-] = delta_ij
// (q^{h_i} - q^{-h_i}), and the q-Serre relations.
CheckReport verify_relations(const VectorRep& rep);

struct SigmaTransform {
    int n = 0;
    std::vector<LaurentPoly> sigma;  // unit monomials, indices 0..n
    PolyMatrix Sigma;                // diagonal basis-change matrix, dimension 2n
    PolyMatrix SigmaInv;
    LaurentPoly zeta;                // spectral shift factor

    SigmaTransform() : Sigma(1, 1), SigmaInv(1, 1) {}
};

SigmaTransform sigma_transform(int n, const std::vector<LaurentPoly>& sigma);

// basis-change identity pi_x(sigma(Q)) = Sigma^{-1} pi_{zeta x}(Q) Sigma for
// every generator
CheckReport check_basis_change(const VectorRep& rep, const SigmaTransform& st);

}  // namespace dnr
