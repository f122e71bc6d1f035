#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galois/diffop.hpp"

namespace galois {

enum class GroupTag {
    Identity,
    NRoots,
    NQuasiRoots,
    Multiplicative,
    Additive,
    Borel,
    BorelSubgroup,
    DihedralInfinite,
    DihedralSubgroupFinite,
    Tetrahedral,
    Octahedral,
    Icosahedral,
    SL2,
};

enum class Certainty { Exact, UpperBound };

struct GaloisGroup {
    GroupTag tag = GroupTag::SL2;
    int n = 0;  // NRoots / NQuasiRoots
    Certainty certainty = Certainty::Exact;

    std::string to_string() const;
    bool integrable() const { return tag != GroupTag::SL2; }
    friend bool operator==(const GaloisGroup& a, const GaloisGroup& b) { return a.tag == b.tag && a.n == b.n; }
};

const char* group_tag_name(GroupTag t);

struct TraceStep {
    int kcase;
    std::string step;
    std::string detail;
};
using Trace = std::vector<TraceStep>;

// local data at one point of Gamma (finite pole or infinity)
struct PointData {
    bool at_infinity = false;
    Constant location;
    int order = 0;           // pole order, or order of r at infinity
    Constant b;              // coefficient entering the exponents
    RatFunc sqrt_part;       // [sqrt r]_c or [sqrt r]_inf
    std::vector<Constant> alpha;  // (alpha+, alpha-) for case 1, empty if excluded
};

struct CaseOneCandidate {
    long n;
    std::vector<int> signs;  // +1/-1 per point, infinity last
    RatFunc omega;
};

// set when a candidate had to be skipped, so failure of the case is not proven
struct Incomplete {
    bool flag = false;
    ErrorKind kind = ErrorKind::MixedRadicands;
    std::string reason;
};

struct CaseOneData {
    bool possible = false;
    Incomplete incomplete;
    std::vector<PointData> points;  // finite poles then infinity
    std::vector<CaseOneCandidate> D;
};

struct CaseTwoCandidate {
    long n;
    std::vector<Constant> e;  // per finite pole then infinity
    RatFunc theta;
};

struct CaseTwoData {
    Incomplete incomplete;
    std::vector<std::vector<Constant>> E;  // per finite pole then infinity
    std::vector<CaseTwoCandidate> D;
};

struct CaseThreeCandidate {
    int m;
    long n;
    std::vector<Constant> e;
    RatFunc theta;
};

struct CaseThreeData {
    bool precondition = false;
    Incomplete incomplete;
    Poly S;
    std::vector<CaseThreeCandidate> D;
    int m = 0;                   // m of the successful candidate
    int tower_sign = 0;          // sign of the ((m-i)S' - S theta) P_i term that verified
    std::vector<RatFunc> tower;  // P_m ... P_0 of the successful candidate
};

struct KovacicOptions {
    long max_degree = 200;  // largest n tried for P_n
};

struct CaseOneResult {
    CaseOneData data;
    std::vector<HyperexpSolution> solutions;
};
struct CaseTwoResult {
    CaseTwoData data;
    std::optional<HyperexpSolution> solution;
};
struct CaseThreeResult {
    CaseThreeData data;
    std::optional<HyperexpSolution> solution;
};

struct KovacicReport {
    int case_reached = 4;
    std::vector<HyperexpSolution> solutions;
    // set when the second solution is only known as zeta1 * int dx / zeta1^2
    std::optional<std::string> second_solution_formula;
    GaloisGroup group;
    Trace trace;
    CaseOneData case1;
    CaseTwoData case2;
    CaseThreeData case3;
};

// step 1 of case 1 only: local data and alpha values at every point
CaseOneData case1_points(const ReducedODE& eq);
CaseOneResult run_case1(const ReducedODE& eq, Trace* trace = nullptr, const KovacicOptions& opt = {});
CaseTwoResult run_case2(const ReducedODE& eq, Trace* trace = nullptr, const KovacicOptions& opt = {});
CaseThreeResult run_case3(const ReducedODE& eq, Trace* trace = nullptr, const KovacicOptions& opt = {});
KovacicReport run_full(const ReducedODE& eq, const KovacicOptions& opt = {});
GaloisGroup classify_group(const KovacicReport& rep);

// d/dx F(omega) reduced modulo F vanishes, F = sum F[i] omega^i, with omega' = r - omega^2
bool lifted_riccati_holds(const std::vector<RatFunc>& F, const RatFunc& r);
// residues of a log-derivative when zeta is algebraic (no polynomial part, simple poles,
// rational residues); nullopt otherwise
std::optional<std::vector<QRat>> algebraic_residues(const RatFunc& omega);
// least N with zeta^N rational for zeta = P exp(int omega), 0 if not algebraic
long algebraic_order(const RatFunc& omega);
// case-2 polynomial at b: the recu2 operator applied to P
RatFunc recu2_residual(const RatFunc& r, const RatFunc& theta, const RatFunc& P);

}  // namespace galois
