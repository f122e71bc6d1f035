#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "galois/algebrize.hpp"
#include "galois/eigenring.hpp"
#include "galois/errors.hpp"
#include "json.hpp"

namespace galois {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Number, ImagUnit, Symbol, Neg, Add, Sub, Mul, Div, Pow, Call };
    Kind kind = Kind::Number;
    QRat value;          // Number (nonnegative integer from the parser)
    long exponent = 0;   // Pow
    std::string name;    // Symbol or function name
    std::vector<ExprPtr> args;
    size_t pos = 0;      // offset in the source text
};

ExprPtr make_number(const QRat& v);
ExprPtr make_imag();
ExprPtr make_symbol(const std::string& name);
ExprPtr make_unary(Expr::Kind k, ExprPtr a);
ExprPtr make_binary(Expr::Kind k, ExprPtr a, ExprPtr b);
ExprPtr make_pow(ExprPtr base, long e);
ExprPtr make_call(const std::string& fn, ExprPtr arg);

class ParseError : public Error {
public:
    ParseError(ErrorKind kind, size_t pos, const std::string& what);
    size_t position() const { return pos_; }

private:
    size_t pos_;
};

struct ParseOptions {
    std::string var = "x";
    std::vector<std::string> params;  // extra symbols (e.g. a shape-invariance parameter)
};

const std::vector<std::string>& supported_functions();
ExprPtr parse(const std::string& text, const ParseOptions& opt = {});
std::string print(const ExprPtr& e);
bool same_tree(const ExprPtr& a, const ExprPtr& b);

struct NormalizedInput {
    RatFunc f;                               // over the working variable
    std::optional<HamiltonianChange> change;  // set when atoms were replaced by z
    std::vector<long> exp_powers;            // e^{c_i x} = z^{m_i}
    std::string variable = "x";              // variable of f
};

// var "z": input is already algebrized and must be rational
NormalizedInput normalize(const ExprPtr& e, const std::string& var = "x");
// rational in the variable with polynomial dependence on the parameter
std::vector<RatFunc> evaluate_with_parameter(const ExprPtr& e, const std::string& var, const std::string& param);
// numeric literal such as "-3/4" or "2*i"
Constant parse_constant(const std::string& text);

enum class Command { Solve, Group, Eigenring, Darboux, Crum, Shape, Algebrize, Special, Spectrum };
const char* command_name(Command c);
Command command_from_name(const std::string& s);

struct AnalysisRequest {
    Command command = Command::Solve;
    std::optional<std::string> potential;  // Schrodinger potential V
    std::optional<std::string> r;          // reduced coefficient r of d^2 y = r y
    std::optional<Constant> lambda;
    long n_max = 4;
    std::vector<std::string> seeds;         // log-derivatives of seed solutions
    std::vector<Constant> seed_lambdas;
    AnsatzBounds bounds;
    std::string var = "x";
};

struct SolutionView {
    std::string multiplier;
    std::string omega;
    std::string omega_partial_fractions;
    std::string omega_integral;
    int algebraic_degree = 1;
    std::vector<std::string> minimal_polynomial;  // cases 2-3, coefficients lowest first
};

struct SpectrumRow {
    Constant lambda;
    long n = -1;
    std::string branch;
    std::string group;
    std::string multiplier;
};

struct Report {
    std::string command;
    nlohmann::ordered_json input = nlohmann::ordered_json::object();
    std::optional<int> case_reached;
    std::vector<SolutionView> solutions;
    std::optional<std::string> second_solution;
    std::optional<std::string> galois_group;
    std::optional<std::string> certainty;
    std::optional<int> eigenring_dimension;
    std::vector<std::string> eigenring_basis;
    std::vector<SpectrumRow> spectrum;
    nlohmann::ordered_json details = nlohmann::ordered_json::object();
    std::vector<std::string> trace;
    std::vector<std::string> warnings;
};

enum class OutputFormat { Json, Text };

inline constexpr const char* kSchemaVersion = "1.0";

Report run_command(const AnalysisRequest& req);
std::string emit_report(const Report& rep, OutputFormat fmt);
// {"rational", "radical_coeff", "radicand"} or {"exact"} when not a real surd
nlohmann::ordered_json constant_json(const Constant& c);

}  // namespace galois
