#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "gstar/catalog.hpp"
#include "gstar/codim.hpp"
#include "gstar/errors.hpp"
#include "gstar/growth.hpp"
#include "gstar/reptheory.hpp"

using namespace gstar;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kFalse = 2;
constexpr int kCapacity = 3;
constexpr int kInput = 4;

struct Config {
    std::string algebra;
    std::string group = "Z1";
    std::string range = "1..6";
    std::size_t ideal_degree = 4;
    std::string set;
    std::size_t cap = 5040;
    std::string format = "csv";
    std::size_t workers = 1;
    std::uint64_t seed = 1;
};

std::pair<std::size_t, std::size_t> parse_range(const std::string& s) {
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            auto n = std::stoul(s);
            return {n, n};
        }
        auto lo = std::stoul(s.substr(0, dots)), hi = std::stoul(s.substr(dots + 2));
        if (lo == 0 || hi < lo) throw std::invalid_argument("range");
        return {lo, hi};
    } catch (const std::logic_error&) {
        fail(ErrorKind::InvalidParameter, "bad degree range '" + s + "' (expected n or lo..hi)");
    }
}

GroupPtr group_of(const Config& c) { return std::make_shared<FiniteAbelianGroup>(parse_group(c.group)); }

EngineOptions options_of(const Config& c) { return {c.cap, std::max<std::size_t>(c.workers, 1)}; }

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::MalformedInput, "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Catalog spec, or a path to an algebra JSON file.
GStarAlgebra load_algebra(const std::string& spec, const Config& c) {
    if (spec.empty()) fail(ErrorKind::InvalidParameter, "--algebra is required");
    if (spec.ends_with(".json") || std::filesystem::is_regular_file(spec)) {
        auto a = GStarAlgebra::from_json(read_file(spec));
        auto r = a.validate();
        if (!r.ok) fail(ErrorKind::Structural, "algebra fails " + r.axiom + ": " + r.message);
        return a;
    }
    return build_from_spec(spec, group_of(c));
}

CodimKind parse_kind(const std::string& k) {
    if (k == "full") return CodimKind::Full;
    if (k == "star") return CodimKind::Star;
    if (k == "graded") return CodimKind::Graded;
    if (k == "ordinary") return CodimKind::Ordinary;
    fail(ErrorKind::InvalidParameter, "unknown kind '" + k + "'");
}

std::string nv_str(const DegreeVector& nv) {
    std::string s = "(";
    for (std::size_t i = 0; i < nv.size(); ++i) s += (i ? "," : "") + std::to_string(nv[i]);
    return s + ")";
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
}

void emit(const Config& c, const json& j, const std::function<void()>& csv) {
    if (c.format == "json") std::cout << j.dump(2) << "\n";
    else csv();
}

int cmd_codim(const Config& c, const std::string& kind, bool per_block) {
    auto a = load_algebra(c.algebra, c);
    auto [lo, hi] = parse_range(c.range);
    CodimEngine e(a, parse_kind(kind), options_of(c));
    json j{{"algebra", a.name()}, {"kind", kind}, {"codims", json::array()}};
    std::vector<std::string> lines;
    for (std::size_t n = lo; n <= hi; ++n) {
        auto blocks = e.blocks(n);
        std::uint64_t total = 0;
        json jb = json::array();
        for (const auto& b : blocks) {
            auto m = multinomial(b->nv) * b->rank();
            total += m;
            if (per_block) {
                jb.push_back({{"block", nv_str(b->nv)}, {"c", b->rank()}});
                lines.push_back(std::to_string(n) + "," + csv_quote(nv_str(b->nv)) + "," + std::to_string(b->rank()));
            }
        }
        json row{{"n", n}, {"c", total}};
        if (per_block) row["blocks"] = jb;
        j["codims"].push_back(row);
        if (!per_block) lines.push_back(std::to_string(n) + "," + std::to_string(total));
    }
    emit(c, j, [&] {
        std::cout << (per_block ? "n,block,c\n" : "n,c\n");
        for (const auto& l : lines) std::cout << l << "\n";
    });
    return kOk;
}

int cmd_cochar(const Config& c, bool all) {
    auto a = load_algebra(c.algebra, c);
    auto [lo, hi] = parse_range(c.range);
    CodimEngine e(a, CodimKind::Full, options_of(c));
    const auto& G = a.group();
    json j{{"algebra", a.name()}, {"degrees", json::array()}};
    std::vector<std::string> lines;
    for (std::size_t n = lo; n <= hi; ++n) {
        auto entries = cocharacter(e, n);
        std::uint64_t colen = 0;
        json je = json::array();
        for (const auto& x : entries) {
            colen += x.multiplicity;
            if (!all && x.multiplicity == 0) continue;
            auto l = multipartition_str(x.lambda, G);
            je.push_back({{"block", nv_str(x.nv)}, {"lambda", l}, {"m", x.multiplicity}, {"dim", x.dims}});
            lines.push_back(std::to_string(n) + "," + csv_quote(nv_str(x.nv)) + "," + csv_quote(l) + "," +
                            std::to_string(x.multiplicity) + "," + std::to_string(x.dims));
        }
        j["degrees"].push_back({{"n", n}, {"colength", colen}, {"entries", je}});
    }
    emit(c, j, [&] {
        std::cout << "n,block,lambda,m,dim\n";
        for (const auto& l : lines) std::cout << l << "\n";
    });
    return kOk;
}

// Random homogeneous values for the variables of p, drawn from small integers.
std::map<Variable, Vec> random_values(const GStarAlgebra& a, const Polynomial& p, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-3, 3);
    std::map<Variable, Vec> out;
    for (const auto& v : p.variables()) {
        auto comp = a.homogeneous_component(v.degree, v.kind == VarKind::Y ? Sign::Plus : Sign::Minus);
        Vec x = zero_vec(a.dim());
        for (const auto& b : comp.basis()) axpy(x, Rational(coef(rng)), b);
        out[v] = std::move(x);
    }
    return out;
}

int cmd_identity(const Config& c, const std::vector<std::string>& polys, std::size_t samples) {
    auto a = load_algebra(c.algebra, c);
    const auto& G = a.group();
    CodimEngine e(a, CodimKind::Full, options_of(c));
    std::mt19937_64 rng(c.seed);
    bool all = true;
    json j{{"algebra", a.name()}, {"results", json::array()}};
    std::vector<std::string> lines;
    for (const auto& text : polys) {
        for (const auto& p : parse_all(text, G)) {
            auto r = is_identity(e, p);
            json jr{{"polynomial", p.str(G)}, {"identity", r.holds}};
            std::string witness;
            if (r.witness) {
                std::string sub;
                for (const auto& [v, x] : r.witness->substitution)
                    sub += (sub.empty() ? "" : "; ") + v.str(G) + "=" + a.format(x);
                witness = sub + " -> " + a.format(r.witness->value);
                jr["witness"] = {{"multilinear", r.witness->multilinear.str(G)}, {"substitution", sub},
                                 {"value", a.format(r.witness->value)}};
            }
            std::size_t nonzero = 0;
            if (samples && !p.variables().empty())
                for (std::size_t s = 0; s < samples; ++s)
                    if (!is_zero(evaluate(a, p, random_values(a, p, rng)))) ++nonzero;
            if (samples) jr["samples"] = {{"count", samples}, {"nonzero", nonzero}};
            all = all && r.holds;
            lines.push_back(csv_quote(p.str(G)) + "," + (r.holds ? "true" : "false") + "," + csv_quote(witness) +
                            (samples ? "," + std::to_string(nonzero) + "/" + std::to_string(samples) : ""));
            j["results"].push_back(jr);
        }
    }
    emit(c, j, [&] {
        std::cout << "polynomial,identity,witness" << (samples ? ",nonzero_samples" : "") << "\n";
        for (const auto& l : lines) std::cout << l << "\n";
    });
    return all ? kOk : kFalse;
}

int cmd_ideal_check(const Config& c, const std::vector<std::string>& gens) {
    auto a = load_algebra(c.algebra, c);
    const auto& G = a.group();
    std::vector<Polynomial> ps;
    for (const auto& t : gens)
        for (auto& p : parse_all(t, G)) ps.push_back(std::move(p));
    CodimEngine e(a, CodimKind::Full, options_of(c));
    auto r = ideal_generated_check(e, ps, c.ideal_degree);
    json j{{"algebra", a.name()}, {"N", c.ideal_degree}, {"equal", r.equal}, {"blocks_checked", r.blocks_checked}};
    if (r.discrepancy) {
        j["block"] = nv_str(*r.discrepancy);
        j["tideal_dim"] = r.tideal_dim;
        j["kernel_dim"] = r.kernel_dim;
        if (r.evidence) j["evidence"] = r.evidence->str(G);
        j["detail"] = r.detail;
    }
    emit(c, j, [&] {
        std::cout << "algebra,N,equal,blocks_checked,block,tideal_dim,kernel_dim,evidence\n";
        std::cout << csv_quote(a.name()) << "," << c.ideal_degree << "," << (r.equal ? "true" : "false") << ","
                  << r.blocks_checked << "," << (r.discrepancy ? csv_quote(nv_str(*r.discrepancy)) : "") << ","
                  << r.tideal_dim << "," << r.kernel_dim << "," << (r.evidence ? csv_quote(r.evidence->str(G)) : "")
                  << "\n";
    });
    return r.equal ? kOk : kFalse;
}

int cmd_contains(const Config& c, const std::string& other) {
    auto a = load_algebra(c.algebra, c);
    auto b = load_algebra(other, c);
    auto r = var_contains(a, b, c.ideal_degree, options_of(c));
    const auto& G = a.group();
    json j{{"variety_of", a.name()}, {"member", b.name()}, {"N", c.ideal_degree}, {"contained", r.contained}};
    if (r.block) j["block"] = nv_str(*r.block);
    if (r.separating_identity) j["separating_identity"] = r.separating_identity->str(G);
    emit(c, j, [&] {
        std::cout << "variety_of,member,N,contained,separating_identity\n";
        std::cout << csv_quote(a.name()) << "," << csv_quote(b.name()) << "," << c.ideal_degree << ","
                  << (r.contained ? "true" : "false") << ","
                  << (r.separating_identity ? csv_quote(r.separating_identity->str(G)) : "") << "\n";
    });
    return r.contained ? kOk : kFalse;
}

json profile_json(const PolyProfile& p) {
    json j{{"detected", p.detected}};
    if (p.detected) {
        j["degree"] = p.degree;
        j["leading"] = p.leading.str();
        j["onset"] = p.onset;
        json co = json::array();
        for (const auto& x : p.coefficients) co.push_back(x.str());
        j["coefficients"] = co;
    }
    return j;
}

int cmd_growth(const Config& c) {
    auto a = load_algebra(c.algebra, c);
    auto [lo, hi] = parse_range(c.range);
    if (lo != 1) fail(ErrorKind::InvalidParameter, "growth needs a prefix starting at n = 1");
    CodimEngine e(a, CodimKind::Full, options_of(c));
    auto r = growth_report(e, hi, c.ideal_degree);
    bool bound = r.profile.detected && r.profile.degree + 1 <= r.radical_nilpotency;
    json j{{"algebra", r.algebra}, {"codims", r.codims}, {"profile", profile_json(r.profile)},
           {"label", r.label}, {"radical_nilpotency", r.radical_nilpotency}, {"radical_bound", r.radical_nilpotency - 1},
           {"radical_bound_holds", bound}, {"N", c.ideal_degree}, {"exclusions", json::array()}};
    for (const auto& x : r.exclusions) {
        json jx{{"algebra", x.key}, {"verdict", x.excluded ? "excluded-at-N" : "not-excluded-at-N"}};
        if (x.separating_identity) jx["separating_identity"] = x.separating_identity->str(a.group());
        j["exclusions"].push_back(jx);
    }
    emit(c, j, [&] {
        std::cout << "field,value\n";
        std::cout << "algebra," << csv_quote(r.algebra) << "\n";
        std::string cs;
        for (auto v : r.codims) cs += (cs.empty() ? "" : " ") + std::to_string(v);
        std::cout << "codims," << cs << "\n";
        std::cout << "label," << r.label << "\n";
        if (r.profile.detected) {
            std::cout << "degree," << r.profile.degree << "\n";
            std::cout << "leading," << r.profile.leading.str() << "\n";
            std::cout << "onset," << r.profile.onset << "\n";
        }
        std::cout << "radical_nilpotency," << r.radical_nilpotency << "\n";
        std::cout << "radical_bound_holds," << (bound ? "true" : "false") << "\n";
        for (const auto& x : r.exclusions)
            std::cout << "exclusion:" << x.key << "," << (x.excluded ? "excluded-at-N" : "not-excluded-at-N") << "\n";
    });
    return kOk;
}

int cmd_minimal(const Config& c) {
    auto a = load_algebra(c.algebra, c);
    auto [lo, hi] = parse_range(c.range);
    if (lo != 1) fail(ErrorKind::InvalidParameter, "minimal needs a prefix starting at n = 1");
    CodimEngine e(a, CodimKind::Full, options_of(c));
    auto v = minimality_report(e, c.ideal_degree, hi);
    json j{{"algebra", a.name()}, {"verdict", v.verdict}, {"profile", profile_json(v.profile)}};
    if (v.match) j["match"] = *v.match;
    emit(c, j, [&] {
        std::cout << "algebra,verdict,match\n";
        std::cout << csv_quote(a.name()) << "," << csv_quote(v.verdict) << "," << (v.match ? *v.match : "") << "\n";
    });
    return v.match ? kOk : kFalse;
}

int cmd_incomparability(const Config& c) {
    if (c.set.empty()) fail(ErrorKind::InvalidParameter, "--set is required");
    auto r = pairwise_incomparability(c.set, group_of(c), c.ideal_degree, options_of(c));
    json j{{"set", c.set}, {"N", c.ideal_degree}, {"keys", r.keys}, {"contained", r.contained},
           {"unseparated", json::array()}};
    for (auto [i, k] : r.unseparated) j["unseparated"].push_back({r.keys[i], r.keys[k]});
    emit(c, j, [&] {
        std::cout << "Id_of";
        for (const auto& k : r.keys) std::cout << "," << csv_quote(k);
        std::cout << "\n";
        for (std::size_t i = 0; i < r.keys.size(); ++i) {
            std::cout << csv_quote(r.keys[i]);
            for (std::size_t k = 0; k < r.keys.size(); ++k) std::cout << "," << (r.contained[i][k] ? 1 : 0);
            std::cout << "\n";
        }
    });
    return r.unseparated.empty() ? kOk : kFalse;
}

int cmd_catalog_list(const Config& c) {
    json j{{"families", json::array()}, {"sets", catalog_set_names()}};
    for (const auto& f : family_listing()) j["families"].push_back({{"syntax", f.syntax}, {"description", f.description}});
    emit(c, j, [&] {
        std::cout << "syntax,description\n";
        for (const auto& f : family_listing()) std::cout << csv_quote(f.syntax) << "," << csv_quote(f.description) << "\n";
        for (const auto& s : catalog_set_names()) std::cout << "set:" << s << ",named catalog set\n";
    });
    return kOk;
}

int cmd_catalog_show(const Config& c, const std::string& what) {
    auto names = catalog_set_names();
    if (std::find(names.begin(), names.end(), what) != names.end()) {
        auto entries = catalog_set(what, group_of(c));
        json j{{"set", what}, {"group", c.group}, {"members", json::array()}};
        for (const auto& e : entries) j["members"].push_back({{"key", e.key}, {"dim", e.algebra.dim()}});
        emit(c, j, [&] {
            std::cout << "key,dim\n";
            for (const auto& e : entries) std::cout << csv_quote(e.key) << "," << e.algebra.dim() << "\n";
        });
        return kOk;
    }
    auto a = load_algebra(what, c);
    if (c.format == "json") {
        std::cout << a.to_json() << "\n";
        return kOk;
    }
    std::cout << "index,label,degree,involution_image\n";
    for (std::size_t i = 0; i < a.dim(); ++i)
        std::cout << i << "," << csv_quote(a.labels()[i]) << "," << a.group().element_name(a.grading()[i]) << ","
                  << csv_quote(a.format(a.involute(a.basis_vector(i)))) << "\n";
    return kOk;
}

int cmd_validate(const Config& c, const std::string& path) {
    auto a = GStarAlgebra::from_json(read_file(path));
    auto r = a.validate();
    json j{{"algebra", a.name()}, {"ok", r.ok}};
    if (!r.ok) j["axiom"] = r.axiom, j["witness"] = r.witness, j["message"] = r.message;
    emit(c, j, [&] {
        std::cout << "algebra,ok,axiom,message\n";
        std::cout << csv_quote(a.name()) << "," << (r.ok ? "true" : "false") << "," << r.axiom << ","
                  << csv_quote(r.message) << "\n";
    });
    return r.ok ? kOk : kFalse;
}

void common(CLI::App* app, Config& c, bool algebra = true) {
    if (algebra) app->add_option("--algebra", c.algebra, "catalog spec (family[params]@group, '+' for sums) or JSON file");
    app->add_option("--group", c.group, "group when the spec has no @group: Z4, Z2xZ2, 1")->capture_default_str();
    app->add_option("--cap-monomials", c.cap, "largest n! per block")->capture_default_str();
    app->add_option("--format", c.format, "output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    app->add_option("--workers", c.workers, "worker threads")->capture_default_str();
    app->add_option("--seed", c.seed, "seed for randomized checks")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"codimensions, cocharacters and identities of finite-dimensional (G,*)-algebras", "gstar"};
    app.require_subcommand(1);
    Config c;

    auto* codim = app.add_subcommand("codim", "codimension sequence");
    common(codim, c);
    codim->add_option("--n", c.range, "degree or range lo..hi")->capture_default_str();
    std::string kind = "full";
    codim->add_option("--kind", kind, "full, star, graded or ordinary")->capture_default_str();
    bool per_block = false;
    codim->add_flag("--blocks", per_block, "one row per block <n>");

    auto* cochar = app.add_subcommand("cochar", "cocharacter multiplicities and colength");
    common(cochar, c);
    cochar->add_option("--n", c.range, "degree or range lo..hi");
    bool all = false;
    cochar->add_flag("--all", all, "include zero multiplicities");

    auto* identity = app.add_subcommand("identity", "is the polynomial an identity");
    common(identity, c);
    // polynomials are taken verbatim from the leftover arguments: CLI11 would
    // split "[a,b]" as a list
    identity->allow_extras();
    identity->footer("Positional arguments: polynomial texts; x-variables expand to y and z.");
    std::size_t samples = 0;
    identity->add_option("--samples", samples, "extra evaluations at random homogeneous values");

    auto* ideal = app.add_subcommand("ideal-check", "do the generators produce every identity up to degree N");
    common(ideal, c);
    ideal->allow_extras();
    ideal->footer("Positional arguments: generator polynomials.");
    ideal->add_option("--N", c.ideal_degree, "degree bound")->capture_default_str();

    auto* contains = app.add_subcommand("contains", "is the second algebra in the variety of --algebra");
    common(contains, c);
    std::string other;
    contains->add_option("member", other, "algebra to test")->required();
    contains->add_option("--N", c.ideal_degree, "degree bound")->capture_default_str();

    auto* growth = app.add_subcommand("growth", "codimension profile, radical bound and exclusions");
    common(growth, c);
    growth->add_option("--n", c.range, "codimension prefix 1..N")->capture_default_str();
    growth->add_option("--N", c.ideal_degree, "degree bound for exclusions")->capture_default_str();

    auto* minimal = app.add_subcommand("minimal", "match against the minimal varieties of the catalog");
    common(minimal, c);
    minimal->add_option("--n", c.range, "codimension prefix 1..N")->capture_default_str();
    minimal->add_option("--N", c.ideal_degree, "degree bound")->capture_default_str();

    auto* incomp = app.add_subcommand("incomparability", "pairwise containment matrix of a catalog set");
    common(incomp, c, false);
    incomp->add_option("--set", c.set, "catalog set")->required();
    incomp->add_option("--N", c.ideal_degree, "degree bound")->capture_default_str();

    auto* catalog = app.add_subcommand("catalog", "catalog families and sets");
    catalog->require_subcommand(1);
    auto* list = catalog->add_subcommand("list", "families and named sets");
    common(list, c, false);
    auto* show = catalog->add_subcommand("show", "members of a set, or the basis of one algebra");
    common(show, c, false);
    std::string what;
    show->add_option("name", what, "set name or algebra spec")->required();

    auto* validate = app.add_subcommand("validate", "check the axioms of an algebra JSON file");
    common(validate, c, false);
    std::string path;
    validate->add_option("path", path, "JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kInput;
    }

    auto texts = [](CLI::App* sub) {
        auto rest = sub->remaining();
        if (rest.empty()) fail(ErrorKind::InvalidParameter, "no polynomial given");
        for (const auto& r : rest)
            if (r.starts_with("--")) fail(ErrorKind::InvalidParameter, "unknown option " + r);
        return rest;
    };

    try {
        if (*codim) return cmd_codim(c, kind, per_block);
        if (*cochar) return cmd_cochar(c, all);
        if (*identity) return cmd_identity(c, texts(identity), samples);
        if (*ideal) return cmd_ideal_check(c, texts(ideal));
        if (*contains) return cmd_contains(c, other);
        if (*growth) return cmd_growth(c);
        if (*minimal) return cmd_minimal(c);
        if (*incomp) return cmd_incomparability(c);
        if (*list) return cmd_catalog_list(c);
        if (*show) return cmd_catalog_show(c, what);
        if (*validate) return cmd_validate(c, path);
    } catch (const Error& e) {
        std::cerr << "gstar: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return e.kind() == ErrorKind::Capacity ? kCapacity : kInput;
    } catch (const std::exception& e) {
        std::cerr << "gstar: " << e.what() << "\n";
        return kInput;
    }
    return kOk;
}
