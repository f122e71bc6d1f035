#include <iostream>

#include "CLI11.hpp"
#include "galois/frontend.hpp"

using namespace galois;

namespace {

struct Options {
    std::string potential, r, lambda, bounds, var = "x";
    long n_max = 4;
    std::vector<std::string> seeds, seed_lambdas;
    bool json = false;
};

AnsatzBounds parse_bounds(const std::string& s)
{
    AnsatzBounds b;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) raise(ErrorKind::InvalidArgument, "bad --bounds item " + item);
        std::string k = item.substr(0, eq);
        int v = std::stoi(item.substr(eq + 1));
        if (k == "boost") b.max_pole_order_boost = v;
        else if (k == "deg") b.max_numerator_degree = v;
        else raise(ErrorKind::InvalidArgument, "bad --bounds key " + k);
    }
    return b;
}

AnalysisRequest to_request(Command c, const Options& o, CLI::App* sub)
{
    AnalysisRequest q;
    q.command = c;
    if (sub->count("--potential")) q.potential = o.potential;
    if (sub->count("--r")) q.r = o.r;
    if (sub->count("--lambda")) q.lambda = parse_constant(o.lambda);
    q.n_max = o.n_max;
    q.seeds = o.seeds;
    for (auto& s : o.seed_lambdas) q.seed_lambdas.push_back(parse_constant(s));
    if (!o.bounds.empty()) q.bounds = parse_bounds(o.bounds);
    q.var = o.var;
    return q;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"galois: differential Galois analysis of Schrodinger equations"};
    app.require_subcommand(1);
    Options o;
    std::vector<std::pair<Command, CLI::App*>> subs;
    const std::pair<Command, const char*> table[] = {
        {Command::Solve, "run the algorithm and report solutions"},
        {Command::Group, "report the Galois group only"},
        {Command::Eigenring, "compute the eigenring"},
        {Command::Darboux, "Darboux transformation from a seed"},
        {Command::Crum, "Crum iteration from several seeds"},
        {Command::Shape, "shape invariance of a superpotential W(x; a)"},
        {Command::Algebrize, "Hamiltonian algebrization"},
        {Command::Special, "special-function families"},
        {Command::Spectrum, "algebraic spectrum"},
    };
    for (auto& [c, help] : table) {
        CLI::App* s = app.add_subcommand(command_name(c), help);
        s->add_option("--potential", o.potential, "potential V (superpotential W for shape)");
        s->add_option("--r", o.r, "coefficient r of y'' = r y");
        s->add_option("--lambda", o.lambda, "spectral parameter");
        s->add_option("--nmax", o.n_max, "degree window")->check(CLI::Range(0L, 64L));
        s->add_option("--seed", o.seeds, "seed log-derivative (repeatable)");
        s->add_option("--seed-lambda", o.seed_lambdas, "seed eigenvalue (repeatable)");
        s->add_option("--bounds", o.bounds, "eigenring ansatz bounds boost=K,deg=D");
        s->add_option("--var", o.var, "input variable")->check(CLI::IsMember({"x", "z"}));
        s->add_flag("--json", o.json, "JSON output");
        subs.push_back({c, s});
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    try {
        for (auto& [c, s] : subs) {
            if (!s->parsed()) continue;
            Report rep = run_command(to_request(c, o, s));
            std::cout << emit_report(rep, o.json ? OutputFormat::Json : OutputFormat::Text);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.unsupported() ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
