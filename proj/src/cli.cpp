#include <k3hilb/cli.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include <k3hilb/classify.hpp>
#include <k3hilb/cone.hpp>
#include <k3hilb/json_io.hpp>
#include <k3hilb/motivic.hpp>
#include <k3hilb/pell.hpp>

namespace k3hilb::cli {

namespace {

using json_io::Json;

class InvalidInput : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Half-degree from either --d style or --degree style input.
std::int64_t half_degree(std::optional<std::int64_t> d, std::optional<std::int64_t> degree, const char* what)
{
    if (d && degree) {
        throw InvalidInput(std::string("give either the half-degree or the degree for ") + what);
    }
    if (degree) {
        if (*degree % 2 != 0) {
            throw InvalidInput(std::string("degree of ") + what + " must be even");
        }
        return *degree / 2;
    }
    if (!d) {
        throw InvalidInput(std::string("missing half-degree for ") + what);
    }
    return *d;
}

std::string ray_text(const cone::ConeCase& c)
{
    if (!c.ray) {
        return "isotropic (not stored)";
    }
    std::ostringstream os;
    os << to_string(c.ray->a) << "*Ht ";
    os << (c.ray->b < 0 ? "- " : "+ ") << to_string(abs(c.ray->b)) << "*B";
    return os.str();
}

std::string cone_text(const cone::ConeCase& c)
{
    std::string s = std::string(cone::to_string(c.tag)) + " ray " + ray_text(c);
    if (c.pell) {
        s += " pell (" + to_string(c.pell->x) + ", " + to_string(c.pell->y) + ")";
    }
    return s;
}

void print_certificate_text(const classify::Certificate& cert, std::ostream& os)
{
    os << "inputs: d_x=" << cert.d_x << " d_y=" << cert.d_y << " n=" << cert.n << '\n';
    if (cert.swapped) {
        os << "normalized: d_x=" << cert.norm_d_x << " d_y=" << cert.norm_d_y << '\n';
    }
    os << "cone case X: " << cone_text(cert.cone_case_x) << '\n';
    os << "cone case Y: " << cone_text(cert.cone_case_y) << '\n';
    os << "verdict: " << classify::to_string(cert.verdict);
    if (cert.reason) {
        os << " (" << classify::to_string(*cert.reason) << ", " << classify::to_string(cert.branch) << ')';
    }
    os << '\n' << "norm trace:\n";
    for (const auto& e : cert.norm_trace) {
        os << "  " << e.expr << " = " << e.value << '\n';
    }
    os << "isometry requires: " << cert.isometry_requires.first << " == " << cert.isometry_requires.second
       << (cert.proof_walk_contradiction ? "  (violated)" : "  (holds)") << '\n';
    for (const auto& note : cert.notes) {
        os << "note: " << note << '\n';
    }
}

std::optional<motivic::HodgeProfile> surface_profile(const std::string& tag)
{
    static const std::map<std::string, std::function<motivic::HodgeProfile()>> table{
        {"k3", motivic::HodgeProfile::k3},
        {"p2", motivic::HodgeProfile::projective_plane},
        {"quadric", motivic::HodgeProfile::quadric_surface},
        {"abelian-even", motivic::HodgeProfile::abelian_even_part},
    };
    const auto it = table.find(tag);
    if (it == table.end()) {
        return std::nullopt;
    }
    return it->second();
}

struct Options {
    bool json = false;
    std::string out_file;

    std::int64_t pell_n = 0;
    std::optional<std::int64_t> pell_d, pell_degree;
    std::string pell_D;

    std::optional<std::int64_t> dx, dy, degree_x, degree_y;
    std::int64_t n = 0;

    std::optional<std::int64_t> cone_d, cone_degree;
    std::int64_t cone_n = 0;

    std::string surface;
    std::string surface_y;
    std::size_t order = 8;

    std::int64_t max_y = 0;
};

int cmd_pell_case_b(const Options& o, std::ostream& os)
{
    const std::int64_t d = half_degree(o.pell_d, o.pell_degree, "the K3 surface");
    if (o.pell_n < 2 || d < 1) {
        throw InvalidInput("case (b) needs n >= 2 and d >= 1");
    }
    const auto sol = pell::solve_case_b(o.pell_n, d);
    if (o.json) {
        Json j = Json::object();
        j["equation"] = "(n-1)*X^2-d*Y^2=1";
        j["n"] = std::to_string(o.pell_n);
        j["d"] = std::to_string(d);
        j["solution"] = sol ? json_io::to_json(*sol) : Json(nullptr);
        os << j.dump(2) << '\n';
    } else if (sol) {
        os << "x=" << sol->x << " y=" << sol->y << '\n';
    } else {
        os << "unsolvable\n";
    }
    return sol ? kOk : kNegativeResult;
}

BigInt parse_discriminant(const std::string& text)
{
    try {
        return parse_bigint(text);
    } catch (const std::invalid_argument& e) {
        throw InvalidInput(e.what());
    }
}

int cmd_pell_fundamental(const Options& o, std::ostream& os)
{
    const pell::PellSolution sol = pell::fundamental_pell(parse_discriminant(o.pell_D));
    if (o.json) {
        Json j = Json::object();
        j["equation"] = "X^2-D*Y^2=1";
        j["D"] = o.pell_D;
        j["solution"] = json_io::to_json(sol);
        os << j.dump(2) << '\n';
    } else {
        os << "x=" << sol.x << " y=" << sol.y << '\n';
    }
    return kOk;
}

int cmd_pell_cf(const Options& o, std::ostream& os)
{
    const pell::ContinuedFraction cf = pell::continued_fraction_sqrt(parse_discriminant(o.pell_D));
    if (o.json) {
        Json j = Json::object();
        j["D"] = o.pell_D;
        j["a0"] = to_string(cf.a0);
        Json period = Json::array();
        for (const auto& a : cf.period) {
            period.push_back(to_string(a));
        }
        j["period"] = std::move(period);
        os << j.dump(2) << '\n';
    } else {
        os << '[' << cf.a0 << ';';
        for (std::size_t i = 0; i < cf.period.size(); ++i) {
            os << (i == 0 ? " " : ", ") << cf.period[i];
        }
        os << "]\n";
    }
    return kOk;
}

int cmd_classify(const Options& o, std::ostream& os)
{
    const std::int64_t dx = half_degree(o.dx, o.degree_x, "X");
    const std::int64_t dy = half_degree(o.dy, o.degree_y, "Y");
    if (dx < 1 || dy < 1 || o.n < 2) {
        throw InvalidInput("classify needs positive half-degrees and n >= 2");
    }
    const classify::Certificate cert = classify::classify(dx, dy, o.n);
    if (o.json) {
        os << json_io::to_json(cert).dump(2) << '\n';
    } else {
        print_certificate_text(cert, os);
    }
    return kOk;
}

int cmd_cone(const Options& o, std::ostream& os)
{
    const std::int64_t d = half_degree(o.cone_d, o.cone_degree, "the K3 surface");
    if (d < 1 || o.cone_n < 2) {
        throw InvalidInput("cone needs d >= 1 and n >= 2");
    }
    const cone::ConeCase c = cone::movable_case(d, o.cone_n);
    std::optional<BigInt> norm;
    if (c.ray) {
        norm = cone::ray_q_norm(c, d, o.cone_n);
    }
    if (o.json) {
        Json j = json_io::to_json(c);
        j["q_norm"] = norm ? Json(to_string(*norm)) : Json(nullptr);
        os << j.dump(2) << '\n';
    } else {
        os << "case " << cone_text(c);
        if (norm) {
            os << " q=" << *norm;
        }
        os << '\n';
    }
    return kOk;
}

int cmd_series(const Options& o, std::ostream& os)
{
    motivic::Series series = [&] {
        if (o.surface == "a2") {
            return motivic::hilb_affine_plane(o.order).series;
        }
        const auto profile = surface_profile(o.surface);
        if (!profile) {
            throw InvalidInput("unknown surface '" + o.surface + "' (k3, a2, p2, quadric, abelian-even)");
        }
        return motivic::hilb_surface_series(*profile, o.order).series;
    }();
    if (o.json) {
        Json j = json_io::to_json(series);
        Json euler = Json::array();
        for (const auto& c : series.coeffs()) {
            euler.push_back(to_string(c.at_ones()));
        }
        j["euler"] = std::move(euler);
        os << j.dump(2) << '\n';
    } else {
        os << "n\tcoefficient\teuler\n";
        for (std::size_t i = 0; i <= series.order(); ++i) {
            os << i << '\t' << series[i].to_string() << '\t' << series[i].at_ones() << '\n';
        }
    }
    return kOk;
}

int cmd_transfer(const Options& o, std::ostream& os)
{
    const auto x = surface_profile(o.surface);
    const auto y = surface_profile(o.surface_y);
    if (!x || !y) {
        throw InvalidInput("unknown surface tag (k3, p2, quadric, abelian-even)");
    }
    const auto hx = motivic::hilb_surface_series(*x, o.order).series;
    const auto hy = motivic::hilb_surface_series(*y, o.order).series;
    const auto diff = motivic::first_difference(hx, hy);
    if (o.json) {
        Json j = Json::object();
        j["x"] = o.surface;
        j["y"] = o.surface_y;
        j["order"] = o.order;
        j["agree"] = !diff.has_value();
        j["first_difference"] = diff ? Json(*diff) : Json(nullptr);
        os << j.dump(2) << '\n';
    } else if (diff) {
        os << "differ at T^" << *diff << '\n';
    } else {
        os << "agree to T^" << o.order << '\n';
    }
    return diff ? kNegativeResult : kOk;
}

int cmd_family(const Options& o, std::ostream& os)
{
    if (o.max_y < 1) {
        throw InvalidInput("--max-y must be at least 1");
    }
    Json rows = Json::array();
    if (!o.json) {
        os << "y\tn\tpell\tverdict\n";
    }
    for (const auto& m : classify::enumerate_family(o.max_y)) {
        const classify::Certificate cert = classify::classify(6, 6, m.n);
        if (cert.verdict != classify::Verdict::NotBirational) {
            throw std::logic_error("family member n = " + std::to_string(m.n) + " not classified");
        }
        if (o.json) {
            Json row = Json::object();
            row["y"] = std::to_string(m.y);
            row["n"] = std::to_string(m.n);
            row["pell"] = json_io::to_json(m.solution);
            row["verdict"] = std::string(classify::to_string(cert.verdict));
            rows.push_back(std::move(row));
        } else {
            os << m.y << '\t' << m.n << "\t(" << m.solution.x << ", " << m.solution.y << ")\t"
               << classify::to_string(cert.verdict) << '\n';
        }
    }
    if (o.json) {
        os << rows.dump(2) << '\n';
    }
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Exact Pell, movable-cone and motivic computations for Hilbert schemes of K3 surfaces",
                 "k3hilb"};
    app.require_subcommand(1);
    app.add_flag("--json", o.json, "Emit JSON");
    app.add_option("--out", o.out_file, "Write output to this file instead of stdout");

    auto* pell_cmd = app.add_subcommand("pell", "Pell equation solvers");
    pell_cmd->require_subcommand(1);
    auto* case_b = pell_cmd->add_subcommand("case-b", "Solve (n-1) X^2 - d Y^2 = 1 with least x");
    case_b->add_option("--n", o.pell_n, "Number of points n >= 2")->required();
    case_b->add_option("--d", o.pell_d, "Half-degree d >= 1");
    case_b->add_option("--degree", o.pell_degree, "Degree 2d (even)");
    auto* fund = pell_cmd->add_subcommand("fundamental", "Fundamental solution of X^2 - D Y^2 = 1");
    fund->add_option("--D", o.pell_D, "Non-square D >= 2")->required();
    auto* cf = pell_cmd->add_subcommand("cf", "Continued fraction of sqrt(D)");
    cf->add_option("--D", o.pell_D, "Non-square D >= 2")->required();

    auto* cls = app.add_subcommand("classify", "Decide birational inequivalence of X^[n], Y^[n]");
    cls->add_option("--dx", o.dx, "Half-degree of X");
    cls->add_option("--dy", o.dy, "Half-degree of Y");
    cls->add_option("--degree-x", o.degree_x, "Degree 2d_X of X (even)");
    cls->add_option("--degree-y", o.degree_y, "Degree 2d_Y of Y (even)");
    cls->add_option("--n", o.n, "Number of points n >= 2")->required();

    auto* cone_cmd = app.add_subcommand("cone", "Movable cone case and extremal ray of X^[n]");
    cone_cmd->add_option("--d", o.cone_d, "Half-degree d >= 1");
    cone_cmd->add_option("--degree", o.cone_degree, "Degree 2d (even)");
    cone_cmd->add_option("--n", o.cone_n, "Number of points n >= 2")->required();

    auto* series = app.add_subcommand("series", "Generating series of Hilbert schemes of points");
    series->add_option("--surface", o.surface, "k3, a2, p2, quadric or abelian-even")->required();
    series->add_option("--order", o.order, "Truncation order")->capture_default_str();

    auto* transfer = app.add_subcommand("transfer", "Compare Hilbert series of two surfaces");
    transfer->add_option("--x", o.surface, "Surface tag")->required();
    transfer->add_option("--y", o.surface_y, "Surface tag")->required();
    transfer->add_option("--order", o.order, "Truncation order")->capture_default_str();

    auto* family = app.add_subcommand("family", "Degree-12 family n = 6y^2 + 2");
    family->add_option("--max-y", o.max_y, "Largest y")->required();

    for (auto* sub : {case_b, fund, cf, cls, cone_cmd, series, transfer, family}) {
        sub->add_flag("--json", o.json, "Emit JSON");
        sub->add_option("--out", o.out_file, "Write output to this file instead of stdout");
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }

    std::ostringstream buffer;
    int code = kOk;
    try {
        if (case_b->parsed()) {
            code = cmd_pell_case_b(o, buffer);
        } else if (fund->parsed()) {
            code = cmd_pell_fundamental(o, buffer);
        } else if (cf->parsed()) {
            code = cmd_pell_cf(o, buffer);
        } else if (cls->parsed()) {
            code = cmd_classify(o, buffer);
        } else if (cone_cmd->parsed()) {
            code = cmd_cone(o, buffer);
        } else if (series->parsed()) {
            code = cmd_series(o, buffer);
        } else if (transfer->parsed()) {
            code = cmd_transfer(o, buffer);
        } else if (family->parsed()) {
            code = cmd_family(o, buffer);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }

    if (o.out_file.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(o.out_file);
        if (!file) {
            err << "error: cannot open '" << o.out_file << "' for writing\n";
            return kInvalidInput;
        }
        file << buffer.str();
    }
    return code;
}

} // namespace k3hilb::cli
