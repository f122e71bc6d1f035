#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galois/algebrize.hpp"
#include "galois/kovacic.hpp"

namespace galois {

// Q = (x^n + sum a_k x^k)^2 + sum b_k x^k
struct CompletedSquare {
    int n = 0;
    std::vector<Constant> a;  // a_0 .. a_{n-1}
    std::vector<Constant> b;  // b_0 .. b_{n-1}
    Poly inner() const;
    Poly remainder() const;
    Poly reconstruct() const { return inner() * inner() + remainder(); }
};

CompletedSquare complete_square(const Poly& Q);

enum class Solvability { AlgebraicallySolvableEvidence, QuasiSolvable, TrivialQuasiSolvable, NonSolvableInWindow };
const char* solvability_name(Solvability s);

struct SpectrumEntry {
    Constant lambda;
    long n = -1;         // degree of the generating polynomial, -1 for window-only candidates
    std::string branch;  // sign per point, finite poles first, infinity last
    std::optional<Poly> multiplier;  // closed-form P when known from the construction
    std::optional<RatFunc> omega;    // exponent log-derivative paired with multiplier
    KovacicReport report;
    std::optional<Surd> lambda_surd() const { return lambda.to_surd(); }
};

struct RejectedCandidate {
    Constant lambda;
    std::string reason;
};

struct AlgebraicSpectrumReport {
    long n_max = 0;
    std::vector<SpectrumEntry> verified;
    std::vector<RejectedCandidate> rejected;
    Solvability classification = Solvability::NonSolvableInWindow;
    std::optional<std::vector<Poly>> elimination_polynomials;  // Q_{m+1}(lambda) per branch
    bool pattern_grows = false;  // verified values keep appearing in the upper half of the window
    bool case1_only = true;      // completeness only relative to case-1 candidate generation
    std::vector<std::string> notes;

    bool contains(const Constant& lambda) const;
    const SpectrumEntry* find(const Constant& lambda) const;
};

// d^2 Psi = (V - lambda) Psi with V polynomial
AlgebraicSpectrumReport polynomial_spectrum(const Poly& V, long n_max);

struct QuasiSolvableBranch {
    int sign = 1;  // Psi = P e^{sign f}
    Poly Q;        // elimination polynomial in lambda (monic)
    std::vector<Constant> lambdas;
    std::vector<Poly> P;  // P for each lambda
};

struct QuasiSolvableResult {
    long n = 0;
    std::vector<QuasiSolvableBranch> branches;
    std::vector<Constant> lambdas() const;
};

// polynomial P_n of the given degree; c_{n-1}, ..., c_0 eliminated top-down
QuasiSolvableResult quasi_solvable_eliminate(const Poly& V, long n);

// r(lambda) = base + lambda * coeff
struct LambdaFamily {
    RatFunc base, coeff;
    RatFunc at(const Constant& lambda) const { return base + RatFunc(lambda) * coeff; }
};
LambdaFamily schrodinger_family(const RatFunc& V);  // V - lambda
LambdaFamily family_of(const ReducedAlgebrizedSchrodinger& s);  // V_bold - lambda/alpha

struct SpectrumScanConfig {
    long n_max = 4;
    std::optional<std::vector<Constant>> lambda_window;
    bool verify = true;  // cannot be disabled
};

AlgebraicSpectrumReport scan_spectrum(const LambdaFamily& fam, const SpectrumScanConfig& cfg);

Solvability classify_solvability(const AlgebraicSpectrumReport& rep);

}  // namespace galois
