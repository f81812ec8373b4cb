#include "ffclass/report.hpp"

#include <ostream>

#include "ffclass/poly_text.hpp"

namespace ffclass {

Classification::Classification(ClassGroupTable t)
    : table(std::move(t)),
      genera(genus_partition(table)),
      merged(improper_classes(table)),
      inherits(inherits_group_structure(table)) {}

Classification classify(const Poly& alpha) { return Classification(enumerate_classes(alpha)); }

nlohmann::json classification_json(const Classification& result) {
    const ClassGroupTable& table = result.table;
    nlohmann::json classes = nlohmann::json::array();
    for (std::size_t i = 0; i < table.classes.size(); ++i) {
        const auto form = form_strings(table.forms[i]);
        classes.push_back({
            {"u", to_string(table.classes[i].u())},
            {"v", to_string(table.classes[i].v())},
            {"form", {form[0], form[1], form[2]}},
            {"order", table.orders[i]},
            {"genus", result.genera.vectors[i].label()},
            {"principal",
             result.genera.vectors[i] ==
                 result.genera.vectors[static_cast<std::size_t>(table.identity_index())]},
        });
    }
    return {
        {"p", table.alpha.modulus()},
        {"alpha", to_string(table.alpha)},
        {"classes", classes},
        {"invariant_factors", table.invariant_factors},
        {"num_genera", result.genera.count()},
        {"cl_merged", result.merged},
    };
}

namespace {

std::string structure_string(const std::vector<std::int64_t>& factors) {
    if (factors.empty())
        return "trivial";
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i)
            s += " x ";
        s += "Z/" + std::to_string(factors[i]);
    }
    return s;
}

} // namespace

void print_classification(std::ostream& out, const Classification& result) {
    const ClassGroupTable& table = result.table;
    out << "p = " << table.alpha.modulus() << ", alpha = " << to_string(table.alpha) << "\n";
    out << table.class_number() << " classes, group " << structure_string(table.invariant_factors)
        << ", H^1 order " << h1_order(table) << "\n";
    out << "idx  ideal          form                           order  genus  principal\n";
    const int id = table.identity_index();
    for (std::size_t i = 0; i < table.classes.size(); ++i) {
        std::string ideal = to_string(table.classes[i]);
        std::string form = to_string(table.forms[i]);
        out << i << "    " << ideal << std::string(ideal.size() < 15 ? 15 - ideal.size() : 1, ' ')
            << form << std::string(form.size() < 31 ? 31 - form.size() : 1, ' ') << table.orders[i]
            << "      " << result.genera.vectors[i].label() << "     "
            << (result.genera.vectors[i] == result.genera.vectors[static_cast<std::size_t>(id)]
                    ? "yes"
                    : "no")
            << "\n";
    }
    out << "genera: " << result.genera.count() << "\n";
    out << "improper classes:";
    for (const auto& group : result.merged) {
        out << " {";
        for (std::size_t i = 0; i < group.size(); ++i)
            out << (i ? " " : "") << group[i];
        out << "}";
    }
    out << "\ninherits group law: " << (result.inherits ? "yes" : "no") << "\n";
}

EllipticReport elliptic_report(const EllipticCurve& curve) {
    EllipticReport report{curve, enumerate_points(curve), {}, {}, verify_isomorphism(curve)};
    for (const ProjPoint& P : report.points) {
        report.orders.push_back(point_order(P, curve));
        report.ideals.push_back(point_to_class(P, curve));
    }
    return report;
}

nlohmann::json elliptic_json(const EllipticReport& report) {
    nlohmann::json points = nlohmann::json::array();
    for (std::size_t i = 0; i < report.points.size(); ++i) {
        points.push_back({
            {"point", report.points[i].to_string()},
            {"order", report.orders[i]},
            {"u", to_string(report.ideals[i].u())},
            {"v", to_string(report.ideals[i].v())},
        });
    }
    nlohmann::json iso = {
        {"points", report.isomorphism.point_count},
        {"classes", report.isomorphism.class_count},
        {"bijective", report.isomorphism.bijective},
        {"homomorphism", report.isomorphism.homomorphism},
        {"violations", report.isomorphism.violations},
        {"pass", report.isomorphism.pass()},
    };
    return {
        {"p", report.curve.field().modulus()},
        {"alpha", to_string(report.curve.alpha())},
        {"points", points},
        {"isomorphism", iso},
    };
}

void print_elliptic(std::ostream& out, const EllipticReport& report) {
    out << "curve y^2 = " << to_string(report.curve.alpha()) << " over F_"
        << report.curve.field().modulus() << "\n";
    out << report.points.size() << " points\n";
    out << "point        order  ideal\n";
    for (std::size_t i = 0; i < report.points.size(); ++i) {
        std::string pt = report.points[i].to_string();
        out << pt << std::string(pt.size() < 13 ? 13 - pt.size() : 1, ' ') << report.orders[i]
            << "      " << to_string(report.ideals[i]) << "\n";
    }
    out << "isomorphism with the class group: "
        << (report.isomorphism.pass() ? "verified" : "FAILED") << " (" << report.isomorphism.point_count
        << " points, " << report.isomorphism.class_count << " classes)\n";
    for (const auto& v : report.isomorphism.violations)
        out << "  violation: " << v << "\n";
}

nlohmann::json oracle_json(const OrbitReport& report) {
    nlohmann::json reps = nlohmann::json::array();
    for (const QuadForm& rep : report.orbit_reps) {
        const auto s = form_strings(rep);
        reps.push_back({s[0], s[1], s[2]});
    }
    return {
        {"p", report.alpha.modulus()},
        {"alpha", to_string(report.alpha)},
        {"degree_bound", report.degree_bound},
        {"enumerated", report.enumerated},
        {"escaped", report.escaped},
        {"orbit_count", report.orbit_count},
        {"orbit_reps", reps},
        {"warnings", report.warnings},
    };
}

void print_oracle(std::ostream& out, const OrbitReport& report) {
    out << "orbit oracle for alpha = " << to_string(report.alpha) << " over F_"
        << report.alpha.modulus() << ", degree bound " << report.degree_bound << "\n";
    out << "enumerated " << report.enumerated << " forms, " << report.escaped
        << " closure steps escaped the box\n";
    out << report.orbit_count << " orbits with a reduced representative:\n";
    for (const QuadForm& rep : report.orbit_reps)
        out << "  " << to_string(rep) << "\n";
    for (const auto& w : report.warnings)
        out << "warning: " << w << "\n";
}

} // namespace ffclass
