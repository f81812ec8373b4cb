#include "ffclass/cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ffclass/acceptance.hpp"
#include "ffclass/poly_text.hpp"
#include "ffclass/report.hpp"

namespace ffclass {

namespace {

struct Request {
    std::string command;
    std::int64_t p = 0;
    std::string alpha_text;
    std::string form_text;
    std::string form2_text;
    std::string ideal1_text;
    std::string ideal2_text;
    std::string output = "text";
    int degree_bound = -1;
    bool self_check = false;
    std::uint64_t seed = 0;
    bool seed_set = false;
};

void emit(std::ostream& out, const std::string& mode, const nlohmann::json& json,
          const std::function<void()>& text) {
    if (mode == "json")
        out << json.dump(2) << "\n";
    else
        text();
}

int dispatch(const Request& req, std::ostream& out) {
    if (req.command == "selftest") {
        AcceptanceOptions options;
        options.seed = req.seed_set ? req.seed : default_seed();
        return run_acceptance(out, options) ? 0 : 1;
    }

    const PrimeField field(req.p);
    const Poly alpha = parse_poly(req.alpha_text, field);

    if (req.command == "classify") {
        const Classification result = classify(alpha);
        emit(out, req.output, classification_json(result),
             [&] { print_classification(out, result); });
        return 0;
    }
    if (req.command == "reduce") {
        const QuadForm input = parse_form(req.form_text, field);
        const ReduceResult result = reduce(input, alpha);
        const MumfordIdeal ideal = to_mumford(result.form, alpha);
        nlohmann::json json = {
            {"p", req.p},
            {"alpha", to_string(alpha)},
            {"form", form_strings(result.form)},
            {"u", to_string(ideal.u())},
            {"v", to_string(ideal.v())},
        };
        emit(out, req.output, json, [&] {
            out << "reduced: " << to_string(result.form) << "\n"
                << "ideal:   " << to_string(ideal) << "\n";
        });
        return 0;
    }
    if (req.command == "compose") {
        const MumfordIdeal lhs = parse_ideal(req.ideal1_text, field, alpha);
        const MumfordIdeal rhs = parse_ideal(req.ideal2_text, field, alpha);
        if (!is_valid(lhs) || !is_valid(rhs))
            throw math_error("invalid ideal operand");
        const MumfordIdeal result = compose(lhs, rhs);
        nlohmann::json json = {
            {"p", req.p},
            {"alpha", to_string(alpha)},
            {"u", to_string(result.u())},
            {"v", to_string(result.v())},
            {"order", order_of(result)},
        };
        emit(out, req.output, json, [&] {
            out << to_string(result) << " (order " << order_of(result) << ")\n";
        });
        return 0;
    }
    if (req.command == "equiv") {
        const QuadForm q1 = parse_form(req.form_text, field);
        const QuadForm q2 = parse_form(req.form2_text, field);
        const bool equivalent = proper_equivalent(q1, q2, alpha);
        nlohmann::json json = {
            {"p", req.p}, {"alpha", to_string(alpha)}, {"properly_equivalent", equivalent}};
        emit(out, req.output, json, [&] {
            out << (equivalent ? "properly equivalent" : "not properly equivalent") << "\n";
        });
        return 0;
    }
    if (req.command == "genus") {
        const QuadForm q = parse_form(req.form_text, field);
        const GenusVector genus = genus_of_form(q, alpha);
        const bool principal = is_principal_genus(q, alpha);
        nlohmann::json json = {{"p", req.p},
                               {"alpha", to_string(alpha)},
                               {"genus", genus.label()},
                               {"principal", principal}};
        emit(out, req.output, json, [&] {
            out << "genus " << genus.label() << (principal ? " (principal)" : "") << "\n";
        });
        return 0;
    }
    if (req.command == "elliptic") {
        const EllipticReport report = elliptic_report(EllipticCurve(field, alpha));
        emit(out, req.output, elliptic_json(report), [&] { print_elliptic(out, report); });
        return report.isomorphism.pass() ? 0 : 1;
    }
    if (req.command == "oracle") {
        const int bound = req.degree_bound > 0 ? req.degree_bound : alpha.degree();
        OracleOptions options;
        options.self_check = req.self_check;
        const OrbitReport report = orbit_classes(alpha, bound, options);
        emit(out, req.output, oracle_json(report), [&] { print_oracle(out, report); });
        return 0;
    }
    throw math_error("unknown command " + req.command);
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"binary quadratic forms, class groups and elliptic curves over F_p[x]"};
    app.require_subcommand(1);
    Request req;

    auto add_common = [&](CLI::App* cmd, bool needs_alpha) {
        if (needs_alpha) {
            cmd->add_option("-p,--p", req.p, "odd prime modulus")->required();
            cmd->add_option("--alpha", req.alpha_text, "discriminant polynomial")->required();
        }
        cmd->add_option("--output", req.output, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* classify_cmd = app.add_subcommand("classify", "full class table for a discriminant");
    add_common(classify_cmd, true);

    CLI::App* reduce_cmd = app.add_subcommand("reduce", "reduce a form to its class representative");
    add_common(reduce_cmd, true);
    reduce_cmd->add_option("--form", req.form_text, "form literal a,b,c")->required();

    CLI::App* compose_cmd = app.add_subcommand("compose", "compose two ideal classes");
    add_common(compose_cmd, true);
    compose_cmd->add_option("--i1", req.ideal1_text, "ideal literal u;v")->required();
    compose_cmd->add_option("--i2", req.ideal2_text, "ideal literal u;v")->required();

    CLI::App* equiv_cmd = app.add_subcommand("equiv", "test proper equivalence of two forms");
    add_common(equiv_cmd, true);
    equiv_cmd->add_option("--f1", req.form_text, "form literal a,b,c")->required();
    equiv_cmd->add_option("--f2", req.form2_text, "form literal a,b,c")->required();

    CLI::App* genus_cmd = app.add_subcommand("genus", "genus of a form");
    add_common(genus_cmd, true);
    genus_cmd->add_option("--form", req.form_text, "form literal a,b,c")->required();

    CLI::App* elliptic_cmd =
        app.add_subcommand("elliptic", "point table and class-group isomorphism for y^2 = alpha");
    add_common(elliptic_cmd, true);

    CLI::App* oracle_cmd =
        app.add_subcommand("oracle", "independent orbit enumeration of bounded forms");
    add_common(oracle_cmd, true);
    oracle_cmd->add_option("--bound", req.degree_bound, "degree bound (default: deg alpha)");
    oracle_cmd->add_flag("--self-check", req.self_check, "re-run at bound+1 and compare");

    CLI::App* selftest_cmd = app.add_subcommand("selftest", "run the acceptance suite");
    add_common(selftest_cmd, false);
    selftest_cmd->add_option("--seed", req.seed, "seed for the randomized suites")
        ->each([&](const std::string&) { req.seed_set = true; });

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    req.command = app.get_subcommands().front()->get_name();
    try {
        return dispatch(req, out);
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const math_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace ffclass
