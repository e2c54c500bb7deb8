#include "symdg/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <memory>
#include <ostream>

#include "symdg/checks.hpp"
#include "symdg/parse.hpp"
#include "symdg/render.hpp"

namespace symdg {

namespace {

struct Options {
    std::string structure_file;
    std::string expr1, expr2;
    std::string check;
    std::string format = "text";
    CheckConfig cfg;
};

int do_bracket(const Options& o, bool tilde, std::ostream& out) {
    auto S = std::make_shared<const PoissonStructure>(load_poisson_json(o.structure_file));
    DifferentialForm a = parse_form(o.expr1, S->dim());
    DifferentialForm b = parse_form(o.expr2, S->dim());
    DifferentialForm r = tilde ? tilde_pi(*S, a, b) : koszul_bracket(*S, a, b);
    if (o.format == "json") {
        nlohmann::json j;
        j["result"] = render_canonical(r);
        out << j.dump() << '\n';
    } else {
        out << render_canonical(r) << '\n';
    }
    return 0;
}

int do_schouten_square(const Options& o, std::ostream& out) {
    auto S = std::make_shared<const PoissonStructure>(load_poisson_json(o.structure_file));
    const Polyvector& sq = S->schouten_square();
    if (o.format == "json") {
        nlohmann::json j;
        j["schouten_square"] = render_canonical(sq);
        j["poisson"] = S->is_poisson();
        out << j.dump() << '\n';
    } else {
        out << render_canonical(sq) << '\n'
            << (S->is_poisson() ? "POISSON" : "NOT-POISSON") << '\n';
    }
    return 0;
}

int do_verify(const Options& o, std::ostream& out) {
    auto S = std::make_shared<const PoissonStructure>(load_poisson_json(o.structure_file));
    CheckReport r = run_check(o.check, S, o.cfg);
    out << (o.format == "json" ? report_json(r) : report_text(r)) << '\n';
    return r.pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Koszul-bracket calculus on polynomial Poisson structures"};
    app.require_subcommand(1);

    Options o;

    auto add_common = [&o](CLI::App* cmd) {
        cmd->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* bracket = app.add_subcommand("bracket", "Koszul bracket of two forms");
    bracket->add_option("structure", o.structure_file, "Poisson structure JSON file")->required();
    bracket->add_option("expr1", o.expr1, "first form")->required();
    bracket->add_option("expr2", o.expr2, "second form")->required();
    add_common(bracket);

    CLI::App* tp = app.add_subcommand("tilde-pi", "bilinear degree -2 pairing of two forms");
    tp->add_option("structure", o.structure_file)->required();
    tp->add_option("expr1", o.expr1)->required();
    tp->add_option("expr2", o.expr2)->required();
    add_common(tp);

    CLI::App* sq = app.add_subcommand("schouten-square", "Schouten square and Poisson verdict");
    sq->add_option("structure", o.structure_file)->required();
    add_common(sq);

    CLI::App* verify = app.add_subcommand("verify", "run a property suite");
    verify->add_option("check", o.check, "property suite name")
        ->required()
        ->check(CLI::IsMember(check_names()));
    verify->add_option("structure", o.structure_file)->required();
    verify->add_option("--trials", o.cfg.trials, "number of random trials")
        ->check(CLI::Range(1, 100000));
    verify->add_option("--seed", o.cfg.seed, "random seed");
    verify->add_option("--max-word-length", o.cfg.max_word_length, "word length bound")
        ->check(CLI::Range(1, 4));
    verify->add_option("--max-poly-degree", o.cfg.max_poly_degree, "polynomial degree bound")
        ->check(CLI::Range(0, 3));
    add_common(verify);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(bracket)) return do_bracket(o, false, out);
        if (app.got_subcommand(tp)) return do_bracket(o, true, out);
        if (app.got_subcommand(sq)) return do_schouten_square(o, out);
        if (app.got_subcommand(verify)) return do_verify(o, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace symdg
