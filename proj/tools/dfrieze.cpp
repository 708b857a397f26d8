// dfrieze: cluster variables of type A and D from friezes and boundary words.

#include "dfrieze/boundary.hpp"
#include "dfrieze/checks.hpp"
#include "dfrieze/errors.hpp"
#include "dfrieze/frieze.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace dfrieze;
using Json = nlohmann::ordered_json;

namespace {

struct Options {
    std::string quiver;
    std::string file;
    std::string format = "text";
    std::string eval;
    std::string point;
    std::string fixture;
    int columns = -1;
    int max_rank = 8;
    int trials = 500;
    bool modelled = false;
    bool normalize_fork = false;
    bool all_orientations = false;
};

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// First line that is neither blank nor a # comment.
std::string spec_from_file(const std::string& path) {
    std::istringstream in(read_all(path));
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (!line.empty() && line[0] != '#') return line;
    }
    throw ParseError(path + ": no quiver spec found");
}

/// The resolved input: the canonical seed plus the way back to user labels.
struct Input {
    Classification cls;
    Seed seed;
    std::vector<int> to_user;  ///< to_user[canonical vertex] = user vertex

    int rank() const { return cls.dynkin.rank; }
    LaurentPolynomial user(const LaurentPolynomial& p) const { return permute_variables(p, to_user); }
    int user_vertex(int canonical) const { return to_user.at(static_cast<std::size_t>(canonical)); }
};

Input load_spec(const std::string& text, const Options& opt) {
    auto spec = parse_spec(text);
    Input in{resolve(spec), Seed::initial(Quiver(1, {})), {}};
    int n = in.cls.dynkin.rank;
    if (n > opt.max_rank) {
        throw BudgetExceeded(in.cls.dynkin.label() + " exceeds --max-rank " + std::to_string(opt.max_rank));
    }
    in.seed = Seed::initial(in.cls.canonical);
    in.to_user.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int u = 1; u <= n; ++u) in.to_user[static_cast<std::size_t>(in.cls.relabel[static_cast<std::size_t>(u)])] = u;
    if (opt.normalize_fork && in.cls.dynkin.type == DynkinType::D &&
        fork_info(in.seed.quiver).configuration == ForkConfiguration::Mixed) {
        in.seed = mutate_seed(in.seed, 2);
    }
    return in;
}

Input load(const Options& opt) {
    if (opt.quiver.empty() == opt.file.empty()) throw ParseError("give exactly one of --quiver and --file");
    return load_spec(opt.quiver.empty() ? spec_from_file(opt.file) : opt.quiver, opt);
}

bool identity_labels(const Input& in) {
    for (std::size_t i = 0; i < in.to_user.size(); ++i) {
        if (in.to_user[i] != static_cast<int>(i)) return false;
    }
    return true;
}

std::string relabel_note(const Input& in) {
    std::string s;
    for (int c = 1; c <= in.rank(); ++c) {
        if (!s.empty()) s += ' ';
        s += std::to_string(in.user_vertex(c)) + "->" + std::to_string(c);
    }
    return s;
}

/// --eval: "all=1", "u1=2,u3=1/2" or both; later entries win.
Point parse_eval(const std::string& text, int rank) {
    Point pt{{0, 1}};
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        auto eq = item.find('=');
        if (eq == std::string::npos) throw ParseError("--eval: expected name=value, got '" + item + "'");
        std::string name = trim(item.substr(0, eq));
        Rational q;
        if (q.set_str(trim(item.substr(eq + 1)), 10) != 0 || q.get_den() == 0) {
            throw ParseError("--eval: bad value in '" + item + "'");
        }
        q.canonicalize();
        if (q == 0) throw ParseError("--eval: values must be nonzero");
        if (name == "all") {
            for (int i = 1; i <= rank; ++i) pt[i] = q;
            continue;
        }
        if (name.size() < 2 || name[0] != 'u' || name.find_first_not_of("0123456789", 1) != std::string::npos) {
            throw ParseError("--eval: unknown variable '" + name + "'");
        }
        int idx = std::stoi(name.substr(1));
        if (idx < 1 || idx > rank) throw ParseError("--eval: variable '" + name + "' out of range");
        pt[idx] = q;
    }
    return pt;
}

std::string render(const Rational& q) { return q.get_str(); }

struct Renderer {
    const Input& in;
    std::optional<Point> point;

    std::string operator()(const LaurentPolynomial& canonical) const {
        auto p = in.user(canonical);
        if (point) return render(dfrieze::eval(p, *point));
        return p.to_fraction_string();
    }
    std::string word(const BoundaryWord& w) const {
        std::string out;
        for (std::size_t i = 0; i < w.values.size(); ++i) {
            if (i > 0) {
                out += ' ';
                out += to_char(w.letters[i - 1]);
                out += ' ';
            }
            auto v = (*this)(w.values[i]);
            bool bracket = !point && in.user(w.values[i]).size() > 1;
            out += bracket ? "(" + v + ")" : v;
        }
        return out;
    }
    Json word_json(const BoundaryWord& w) const {
        Json values = Json::array(), letters = Json::array();
        for (const auto& v : w.values) values.push_back((*this)(v));
        for (Letter l : w.letters) letters.push_back(std::string(1, to_char(l)));
        return Json{{"values", values}, {"letters", letters}};
    }
};

Renderer renderer(const Input& in, const Options& opt) {
    Renderer r{in, std::nullopt};
    if (!opt.eval.empty()) r.point = parse_eval(opt.eval, in.rank());
    return r;
}

Json header(const std::string& command, const Input& in) {
    Json j{{"schema", 1}, {"command", command}, {"type", in.cls.dynkin.label()}};
    if (!identity_labels(in)) j["relabel"] = relabel_note(in);
    return j;
}

void text_header(std::ostream& out, const Input& in, const std::string& what) {
    out << "# " << in.cls.dynkin.label() << ' ' << what << '\n';
    if (!identity_labels(in)) out << "# relabelled (user->canonical): " << relabel_note(in) << '\n';
}

// ---- vars --------------------------------------------------------------

std::set<LaurentPolynomial> cluster_variables(const Input& in) {
    if (in.cls.dynkin.type == DynkinType::D) return all_cluster_variables(in.seed);
    int m = in.rank();
    auto fq = fundamental_quiver(compute_frieze(in.seed, m + 3), 0);
    std::set<LaurentPolynomial> out;
    for (const auto& [p, v] : fq.window) out.insert(v);
    return out;
}

int cmd_vars(const Options& opt, std::ostream& out) {
    auto in = load(opt);
    auto r = renderer(in, opt);
    std::set<LaurentPolynomial> vars;
    for (const auto& v : cluster_variables(in)) vars.insert(in.user(v));
    // vars now carries user names; render without a second relabelling
    Input plain = in;
    for (std::size_t i = 0; i < plain.to_user.size(); ++i) plain.to_user[i] = static_cast<int>(i);
    Renderer pr{plain, r.point};
    if (opt.format == "json") {
        Json j = header("vars", in);
        j["count"] = vars.size();
        Json list = Json::array();
        for (const auto& v : vars) {
            Json e{{"expr", v.to_fraction_string()}};
            if (pr.point) e["value"] = pr(v);
            list.push_back(e);
        }
        j["variables"] = list;
        out << j.dump(2) << '\n';
        return 0;
    }
    text_header(out, in, std::to_string(vars.size()) + " cluster variables");
    for (const auto& v : vars) out << pr(v) << '\n';
    return 0;
}

// ---- frieze ------------------------------------------------------------

int cmd_frieze(const Options& opt, std::ostream& out) {
    auto in = load(opt);
    auto r = renderer(in, opt);
    int K = opt.columns >= 0 ? opt.columns : default_columns(in.cls.dynkin);
    auto f = compute_frieze(in.seed, std::max(K, 1));

    std::vector<std::pair<std::string, std::vector<LaurentPolynomial>>> rows;
    std::string what;
    if (opt.modelled) {
        if (in.cls.dynkin.type != DynkinType::D) throw InvalidQuiver("the modelled quiver needs a seed of type D");
        auto m = modelled_quiver(part_F(f));
        rows.emplace_back(std::to_string(in.user_vertex(1)) + "*" + std::to_string(in.user_vertex(2)), m.merged);
        for (int i = 3; i <= in.rank(); ++i) {
            std::vector<LaurentPolynomial> row;
            for (const auto& col : m.tail) row.push_back(col[static_cast<std::size_t>(i - 3)]);
            rows.emplace_back(std::to_string(in.user_vertex(i)), row);
        }
        what = "modelled quiver, columns 0.." + std::to_string(in.rank());
    } else {
        for (int i = 1; i <= in.rank(); ++i) {
            std::vector<LaurentPolynomial> row;
            for (int k = 0; k <= f.columns; ++k) row.push_back(f.at(k, i));
            rows.emplace_back(std::to_string(in.user_vertex(i)), row);
        }
        what = "frieze, columns 0.." + std::to_string(f.columns);
    }

    if (opt.format == "json") {
        Json j = header("frieze", in);
        j["modelled"] = opt.modelled;
        Json list = Json::array();
        for (const auto& [label, row] : rows) {
            Json values = Json::array();
            for (const auto& v : row) values.push_back(r(v));
            list.push_back(Json{{"vertex", label}, {"values", values}});
        }
        j["rows"] = list;
        out << j.dump(2) << '\n';
        return 0;
    }
    text_header(out, in, what);
    for (const auto& [label, row] : rows) {
        out << label << ':';
        for (std::size_t k = 0; k < row.size(); ++k) out << (k == 0 ? " " : " | ") << r(row[k]);
        out << '\n';
    }
    return 0;
}

// ---- boundary ----------------------------------------------------------

LatticePoint parse_point(const std::string& text) {
    auto comma = text.find(',');
    try {
        if (comma == std::string::npos) throw std::invalid_argument("comma");
        std::size_t used = 0;
        std::string a = trim(text.substr(0, comma)), b = trim(text.substr(comma + 1));
        int u = std::stoi(a, &used);
        if (used != a.size()) throw std::invalid_argument("u");
        int v = std::stoi(b, &used);
        if (used != b.size()) throw std::invalid_argument("v");
        return {u, v};
    } catch (const std::logic_error&) {
        throw ParseError("--point: expected U,V, got '" + text + "'");
    }
}

Json point_json(const EvaluatedPoint& e, const Renderer& r) {
    Json j{{"coords", {e.address.position.u, e.address.position.v}},
           {"row", e.address.row},
           {"column", e.address.column},
           {"case", to_string(e.address.kind)},
           {"word", r.word_json(e.address.word)},
           {"value", r(e.value)}};
    if (e.split) j["split"] = {r(e.split->first), r(e.split->second)};
    return j;
}

void point_text(std::ostream& out, const EvaluatedPoint& e, const Renderer& r) {
    out << e.address.position.to_string() << " row " << e.address.row << " column " << e.address.column << ' '
        << to_string(e.address.kind) << ": " << r.word(e.address.word) << " => " << r(e.value);
    if (e.split) out << " = " << r(e.split->first) << " * " << r(e.split->second);
    out << '\n';
}

std::string coords_text(const PositionBoundary& b) {
    std::string s;
    for (std::size_t i = 0; i < b.size(); ++i) s += (i ? " " : "") + b.coords[i].to_string();
    return s;
}

int cmd_boundary(const Options& opt, std::ostream& out) {
    auto in = load(opt);
    if (in.cls.dynkin.type != DynkinType::D) throw InvalidQuiver("boundary words are built for seeds of type D");
    auto r = renderer(in, opt);
    auto model = boundary_model(in.seed);
    auto [x1, x2] = fork_pair(model.seed);

    std::vector<EvaluatedPoint> points;
    if (!opt.point.empty()) {
        EvaluatedPoint e{address_of(model.F, model.tF, parse_point(opt.point)), LaurentPolynomial(in.rank()), std::nullopt};
        e.value = T_value(e.address);
        if (e.address.row == in.rank() + 1) e.split = split_diagonal(e.value, x1, x2);
        points.push_back(std::move(e));
    } else {
        points = evaluate_points(model);
    }

    if (opt.format == "json") {
        Json j = header("boundary", in);
        j["fork"] = to_string(fork_info(model.seed.quiver).configuration);
        if (opt.point.empty()) {
            j["lambda_prime"] = r.word_json(model.word);
            Json F = r.word_json(model.F.word), G = r.word_json(model.tF.word);
            F["coords"] = Json::array();
            G["coords"] = Json::array();
            for (auto p : model.F.coords) F["coords"].push_back({p.u, p.v});
            for (auto p : model.tF.coords) G["coords"].push_back({p.u, p.v});
            j["F"] = F;
            j["tF"] = G;
        }
        Json list = Json::array();
        for (const auto& e : points) list.push_back(point_json(e, r));
        j["points"] = list;
        out << j.dump(2) << '\n';
        return 0;
    }
    text_header(out, in, to_string(fork_info(model.seed.quiver).configuration));
    if (opt.point.empty()) {
        out << "lambda': " << r.word(model.word) << '\n';
        out << "F: " << r.word(model.F.word) << '\n';
        out << "F at: " << coords_text(model.F) << '\n';
        out << "tF: " << r.word(model.tF.word) << '\n';
        out << "tF at: " << coords_text(model.tF) << '\n';
    }
    for (const auto& e : points) point_text(out, e, r);
    return 0;
}

// ---- check -------------------------------------------------------------

FriezeArray load_fixture(const std::string& path, Input& in, const Options& opt) {
    Json j;
    try {
        j = Json::parse(read_all(path));
    } catch (const Json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    if (!j.contains("quiver") || !j.contains("columns")) throw ParseError(path + ": needs 'quiver' and 'columns'");
    Options plain = opt;
    plain.normalize_fork = false;
    in = load_spec(j["quiver"].get<std::string>(), plain);
    if (!identity_labels(in)) throw ParseError(path + ": fixture quivers must use the canonical labelling");
    FriezeArray f{in.seed.quiver, 0, {}};
    for (const auto& col : j["columns"]) {
        std::vector<LaurentPolynomial> values;
        for (const auto& v : col) values.push_back(parse_polynomial(in.rank(), v.get<std::string>()));
        if (static_cast<int>(values.size()) != in.rank()) throw ParseError(path + ": every column needs one value per vertex");
        f.values.push_back(std::move(values));
    }
    if (f.values.size() < 2) throw ParseError(path + ": at least two columns");
    f.columns = static_cast<int>(f.values.size()) - 1;
    return f;
}

int cmd_check(const Options& opt, std::ostream& out) {
    Input in{};
    std::vector<CheckResult> results;
    std::size_t runs = 1;
    if (!opt.fixture.empty()) {
        auto f = load_fixture(opt.fixture, in, opt);
        results.push_back(frieze_relation_check(f));
    } else {
        in = load(opt);
        CheckOptions co;
        co.determinant_trials = opt.trials;
        if (opt.all_orientations) {
            std::vector<std::vector<CheckResult>> all;
            for (const auto& q : all_orientations(in.cls.dynkin)) {
                all.push_back(run_checks(Seed::initial(q), in.cls.dynkin, co));
                co.determinant_trials = 0;  // one randomized run is enough
            }
            runs = all.size();
            results = merge_results(all);
        } else {
            results = run_checks(in.seed, in.cls.dynkin, co);
        }
    }
    bool ok = std::all_of(results.begin(), results.end(), [](const auto& c) { return c.passed; });

    if (opt.format == "json") {
        Json j = header("check", in);
        j["orientations"] = runs;
        Json list = Json::array();
        for (const auto& c : results) list.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        j["checks"] = list;
        j["passed"] = ok;
        out << j.dump(2) << '\n';
    } else {
        text_header(out, in, runs > 1 ? "checks over " + std::to_string(runs) + " orientations" : "checks");
        for (const auto& c : results) out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
        std::size_t failed = std::count_if(results.begin(), results.end(), [](const auto& c) { return !c.passed; });
        out << (ok ? "all checks passed" : std::to_string(failed) + " check(s) failed") << '\n';
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cluster variables of type A and D from friezes and boundary words"};
    app.require_subcommand(1);
    Options opt;

    auto common = [&](CLI::App* sub) {
        sub->add_option("-q,--quiver", opt.quiver, "quiver spec, e.g. \"D4: 1>3 2>3 3>4\"");
        sub->add_option("--file", opt.file, "read the spec from a file ('-' for stdin)");
        sub->add_option("--format", opt.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--max-rank", opt.max_rank, "refuse larger ranks (exit 3)")->check(CLI::PositiveNumber);
    };

    auto* vars = app.add_subcommand("vars", "list all cluster variables");
    common(vars);
    vars->add_option("--eval", opt.eval, "specialize, e.g. all=1 or u1=2,u2=3");
    vars->add_flag("--normalize-fork", opt.normalize_fork, "mutate a mixed fork at vertex 2 first");

    auto* frieze = app.add_subcommand("frieze", "print the frieze window");
    common(frieze);
    frieze->add_option("--columns", opt.columns, "number of columns after column 0")->check(CLI::NonNegativeNumber);
    frieze->add_flag("--modelled", opt.modelled, "glue the fork rows (type D)");
    frieze->add_option("--eval", opt.eval, "specialize, e.g. all=1");
    frieze->add_flag("--normalize-fork", opt.normalize_fork, "mutate a mixed fork at vertex 2 first");

    auto* boundary = app.add_subcommand("boundary", "boundary words and per-point values (type D)");
    common(boundary);
    boundary->add_option("--point", opt.point, "only the point U,V");
    boundary->add_option("--eval", opt.eval, "specialize, e.g. all=1");
    boundary->add_flag("--normalize-fork", opt.normalize_fork, "mutate a mixed fork at vertex 2 first");

    auto* check = app.add_subcommand("check", "cross-validate the formula against the recursion and mutation");
    common(check);
    check->add_flag("--all-orientations", opt.all_orientations, "sweep every orientation of the same type");
    check->add_option("--fixture", opt.fixture, "check the frieze relation on a stored frieze (JSON)");
    check->add_option("--trials", opt.trials, "randomized words per determinant identity")->check(CLI::NonNegativeNumber);
    check->add_flag("--normalize-fork", opt.normalize_fork, "mutate a mixed fork at vertex 2 first");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    // buffered so that a failing command prints nothing on stdout
    std::ostringstream out;
    try {
        int rc = *vars       ? cmd_vars(opt, out)
                 : *frieze   ? cmd_frieze(opt, out)
                 : *boundary ? cmd_boundary(opt, out)
                             : cmd_check(opt, out);
        std::cout << out.str();
        return rc;
    } catch (const BudgetExceeded& e) {
        std::cerr << "dfrieze: " << e.what() << '\n';
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "dfrieze: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "dfrieze: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "dfrieze: internal error: " << e.what() << '\n';
        return 1;
    }
}
