// weylkit command-line front end. Exit codes: 0 ok, 1 check failed,
// 2 bad input or usage, 3 enumeration cap exceeded.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "weylkit/weylkit.hpp"

using namespace weylkit;
using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    return out;
}

ModelPoint<Rational> parse_point(const std::string& text, std::size_t rank) {
    std::vector<Rational> c;
    for (const auto& tok : split(text, ',')) c.push_back(Rational::parse(tok));
    if (c.size() != rank)
        throw UsageError("point '" + text + "' has " + std::to_string(c.size()) + " coordinates, expected " +
                         std::to_string(rank));
    return ModelPoint<Rational>(c);
}

template <class L>
json point_json(const ModelPoint<L>& p) {
    json a = json::array();
    for (const auto& c : p.coords) a.push_back(c.str());
    return a;
}

template <class L>
json points_json(const std::vector<ModelPoint<L>>& ps) {
    json a = json::array();
    for (const auto& p : ps) a.push_back(point_json(p));
    return a;
}

/// Writes next to the target and renames, so readers never see a partial file.
void write_atomically(const std::string& path, const std::string& text) {
    std::filesystem::path target(path), tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw UsageError("cannot write '" + path + "'");
        out << text;
    }
    std::filesystem::rename(tmp, target);
}

void emit(const json& j, const std::string& output) {
    std::string text = j.dump(2) + "\n";
    if (output.empty())
        std::cout << text;
    else
        write_atomically(output, text);
}

std::vector<int> parse_word(const std::string& text) {
    std::vector<int> w;
    for (const auto& tok : split(text, ',')) {
        int i = std::stoi(tok);
        if (i < 1) throw UsageError("word letters are 1-based simple reflection indices");
        w.push_back(i - 1);
    }
    return w;
}

json word_json(const std::vector<int>& w) {
    json a = json::array();
    for (int i : w) a.push_back(i + 1);
    return a;
}

template <OrderedField F>
json rootsys_json(const RootSystem<F>& rs) {
    const std::size_t n = rs.rank();
    json cartan = json::array(), gram = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        json cr = json::array(), gr = json::array();
        for (std::size_t j = 0; j < n; ++j) {
            cr.push_back(rs.cartan(i, j).str());
            gr.push_back(rs.gram(i, j).str());
        }
        cartan.push_back(cr);
        gram.push_back(gr);
    }
    json j;
    j["label"] = rs.label();
    j["rank"] = n;
    j["crystallographic"] = rs.crystallographic();
    j["cartan"] = cartan;
    j["gram"] = gram;
    j["positive_roots"] = points_json(rs.positive_roots());
    j["weyl_order"] = rs.weyl_group().size();
    if (rs.crystallographic()) j["highest_root"] = point_json(rs.highest_root());
    return j;
}

int cmd_rootsys(const std::string& type, const std::string& format, const std::string& output) {
    json j;
    if (type.rfind("I2", 0) == 0)
        j = rootsys_json(RootSystem<NumberFieldElem>::build(type));
    else
        j = rootsys_json(RootSystem<Rational>::build(type));
    if (format == "text") {
        std::cout << j["label"].get<std::string>() << " rank " << j["rank"] << ", |W| = " << j["weyl_order"] << "\n";
        std::cout << "cartan:\n";
        for (const auto& row : j["cartan"]) {
            for (const auto& c : row) std::cout << "  " << c.get<std::string>();
            std::cout << "\n";
        }
        std::cout << "positive roots: " << j["positive_roots"].size() << "\n";
        for (const auto& r : j["positive_roots"]) std::cout << "  " << r.dump() << "\n";
        return 0;
    }
    emit(j, output);
    return 0;
}

Scene<Rational> hull_scene(const RootSystem<Rational>& rs, const ModelPoint<Rational>& x, std::vector<ModelPoint<Rational>> pts) {
    Scene<Rational> sc;
    auto orbit = rs.weyl_orbit(x);
    sc.orbit.assign(orbit.begin(), orbit.end());
    sc.hull = sc.orbit;
    sc.points = std::move(pts);
    return sc;
}

int cmd_hull(const std::string& type, const std::string& point, const std::string& svg, const std::string& output) {
    auto rs = RootSystem<Rational>::build(type);
    auto x = parse_point(point, rs.rank());
    auto q = HullQuery<Rational>::make(rs, x);
    auto pts = enumerate_AQ(rs, q);
    json j;
    j["query"] = {{"type", rs.label()}, {"point", point_json(x)}, {"dominant", point_json(q.x_plus)}};
    j["points"] = points_json(pts);
    j["count"] = pts.size();
    if (!svg.empty()) write_atomically(svg, emit_svg(rs, hull_scene(rs, x, pts)));
    emit(j, output);
    return 0;
}

json path_json(const RootSystem<Rational>& rs, const PLPath<Rational>& p) {
    json bp = json::array();
    for (const auto& [t, v] : p.breakpoints(rs)) {
        json row = json::array({t.str()});
        for (const auto& c : v.coords) row.push_back(c.str());
        bp.push_back(row);
    }
    return {{"breakpoints", bp}, {"endpoint", point_json(p.endpoint())}};
}

int cmd_fold(const std::string& type, const std::string& point, const std::string& target, const std::string& word,
             const std::string& svg, const std::string& output) {
    auto rs = RootSystem<Rational>::build(type);
    auto x = parse_point(point, rs.rank());
    if (!rs.is_dominant(x)) throw UsageError("fold: --point must be dominant");
    auto y = parse_point(target, rs.rank());
    auto w = word.empty() ? rs.longest_element().word : parse_word(word);
    auto tr = parkinson_ram_fold(rs, x, y, w);
    json j;
    j["type"] = rs.label();
    j["point"] = point_json(x);
    j["target"] = point_json(y);
    j["word"] = word_json(tr.word);
    j["m"] = tr.m;
    j["chain"] = points_json(tr.y);
    j["path"] = path_json(rs, tr.path);
    if (!svg.empty()) {
        auto sc = hull_scene(rs, x, enumerate_AQ(rs, x));
        sc.paths.push_back(tr.path.vertices());
        write_atomically(svg, emit_svg(rs, sc));
    }
    emit(j, output);
    return 0;
}

int cmd_verify(const std::string& type, const std::string& point, std::size_t max_gallery, bool timings,
               const std::string& output) {
    auto rs = RootSystem<Rational>::build(type);
    auto x = parse_point(point, rs.rank());
    auto q = HullQuery<Rational>::make(rs, x);
    auto clock = std::chrono::steady_clock::now;
    json timing;
    auto t0 = clock();
    auto aq = enumerate_AQ(rs, q);
    auto w0x = rs.longest_element()(q.x_plus);
    auto closure = positive_fold_closure(rs, PLPath<Rational>::straight(w0x));
    auto ends = closure_endpoints(closure);
    auto t1 = clock();
    timing["paths_ms"] = std::chrono::duration<double, std::milli>(t1 - t0).count();

    json witnesses = json::array();
    auto diff = [&](const std::vector<ModelPoint<Rational>>& a, const std::vector<ModelPoint<Rational>>& b, const char* what) {
        std::vector<ModelPoint<Rational>> d;
        std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(d));
        for (std::size_t i = 0; i < d.size() && i < 5; ++i) witnesses.push_back({{"check", what}, {"point", point_json(d[i])}});
        return d.empty();
    };
    bool ok = diff(ends, aq, "closure_vs_AQ");

    json counts = {{"AQ", aq.size()}, {"closure_paths", closure.size()}, {"closure_endpoints", ends.size()}};
    std::string status = "pass";
    if (rs.crystallographic()) {
        AlcoveGeometry<Rational> geo(rs);
        auto type_x = gallery_type_to(geo, q.x_plus);
        counts["gallery_length"] = type_x.steps.size();
        if (type_x.steps.size() <= max_gallery) {
            auto g = folded_gallery_endpoints(geo, type_x);
            counts["gallery_endpoints"] = g.size();
            ok = diff(g, ends, "galleries_vs_paths") && ok;
        } else {
            status = "partial";
        }
    }
    // the three characterizations on the candidate box
    std::size_t disagreements = 0;
    auto orbit = rs.weyl_orbit(q.x_plus);
    std::vector<ModelPoint<Rational>> orbit_v(orbit.begin(), orbit.end());
    for (const auto& c : AQ_candidates(rs, x)) {
        bool a = in_AQ(rs, c, q), b = in_weyl_intersection(rs, c, q), d = dual_hull_oracle(rs, orbit_v, c);
        if (a != b || a != d) {
            ++disagreements;
            if (witnesses.size() < 10) witnesses.push_back({{"check", "characterizations"}, {"point", point_json(c)}});
        }
    }
    counts["characterization_disagreements"] = disagreements;
    ok = ok && disagreements == 0;
    timing["total_ms"] = std::chrono::duration<double, std::milli>(clock() - t0).count();

    json j;
    j["status"] = ok ? status : "fail";
    j["query"] = {{"type", rs.label()}, {"point", point_json(x)}};
    j["counts"] = counts;
    j["endpoints"] = points_json(ends);
    j["witnesses"] = witnesses;
    if (timings) j["timings"] = timing;
    emit(j, output);
    return ok ? 0 : 1;
}

template <OrderedGroup L>
int run_tree(const json& in, const std::vector<std::string>& labels, const std::string& base_text,
             L (*parse)(const std::string&), const std::string& format, const std::string& output) {
    ProjectiveValuation<L> w(labels);
    std::vector<bool> known(labels.size() * labels.size() * labels.size() * labels.size());
    auto idx = [&](EndId a, EndId b, EndId c, EndId d) { return ((a * labels.size() + b) * labels.size() + c) * labels.size() + d; };
    for (const auto& [key, val] : in.at("values").items()) {
        auto e = split(key, ',');
        if (e.size() != 4) throw UsageError("tree: key '" + key + "' is not a quadruple");
        EndId a = w.id(e[0]), b = w.id(e[1]), c = w.id(e[2]), d = w.id(e[3]);
        w.set(a, b, c, d, parse(val.template get<std::string>()));
        known[idx(a, b, c, d)] = true;
    }
    // fill each missing entry from a given (PV1) image: (c,d;a,b), -(a,b;d,c), -(b,a;c,d), ...
    std::optional<L> fallback;
    if (in.contains("default")) fallback = parse(in.at("default").get<std::string>());
    std::vector<std::string> missing;
    w.for_each_quadruple([&](EndId a, EndId b, EndId c, EndId d) {
        if (known[idx(a, b, c, d)]) return;
        const std::array<std::pair<std::array<EndId, 4>, bool>, 7> images{{{{c, d, a, b}, false},
                                                                           {{a, b, d, c}, true},
                                                                           {{b, a, c, d}, true},
                                                                           {{b, a, d, c}, false},
                                                                           {{d, c, a, b}, true},
                                                                           {{c, d, b, a}, true},
                                                                           {{d, c, b, a}, false}}};
        for (const auto& [q, neg] : images)
            if (known[idx(q[0], q[1], q[2], q[3])]) {
                const L& v = w(q[0], q[1], q[2], q[3]);
                w.set(a, b, c, d, neg ? -v : v);
                return;
            }
        if (fallback)
            w.set(a, b, c, d, *fallback);
        else if (missing.size() < 5)
            missing.push_back(labels[a] + "," + labels[b] + "," + labels[c] + "," + labels[d]);
    });
    if (!missing.empty()) throw UsageError("tree: no value for quadruple " + missing.front() + " or its symmetric images");

    std::array<EndId, 3> base{0, 1, 2};
    if (!base_text.empty()) {
        auto b = split(base_text, ',');
        if (b.size() != 3) throw UsageError("tree: --base needs three ends");
        base = {w.id(b[0]), w.id(b[1]), w.id(b[2])};
    }
    auto pv = check_pv(w);
    json violations = json::array();
    for (std::size_t i = 0; i < pv.violations.size() && i < 20; ++i)
        violations.push_back({{"axiom", pv.violations[i].axiom}, {"detail", pv.violations[i].detail}});
    json j;
    j["ends"] = labels;
    j["base"] = {labels[base[0]], labels[base[1]], labels[base[2]]};
    j["pv_ok"] = pv.ok();
    bool ok = pv.ok();
    if (pv.ok()) {
        auto datum = datum_from_valuation(w, base);
        auto rt = datum.check();
        auto round = roundtrip_check(w, base);
        for (std::size_t i = 0; i < rt.violations.size() && violations.size() < 20; ++i)
            violations.push_back({{"axiom", rt.violations[i].axiom}, {"detail", rt.violations[i].detail}});
        for (std::size_t i = 0; i < round.mismatches.size() && violations.size() < 20; ++i) {
            const auto& m = round.mismatches[i];
            violations.push_back({{"axiom", "roundtrip"}, {"detail", labels[m[0]] + "," + labels[m[1]] + "," + labels[m[2]] + "," + labels[m[3]]}});
        }
        json wedge = json::object();
        for (EndId a = 0; a < labels.size(); ++a)
            for (EndId b = a + 1; b < labels.size(); ++b) wedge[labels[a] + "," + labels[b]] = datum.meet(a, b).str();
        j["rt_ok"] = rt.ok();
        j["roundtrip_ok"] = round.ok();
        j["wedge"] = wedge;
        j["rendering"] = render_tree(datum);
        ok = rt.ok() && round.ok();
        if (format == "text") std::cout << render_tree(datum);
    } else {
        j["rt_ok"] = false;
        j["roundtrip_ok"] = false;
    }
    j["violations"] = violations;
    if (format != "text") emit(j, output);
    return ok ? 0 : 1;
}

Rational parse_rational(const std::string& s) { return Rational::parse(s); }

int cmd_tree(const std::string& input, const std::string& base, const std::string& format, const std::string& output) {
    std::ifstream f(input);
    if (!f) throw UsageError("tree: cannot read '" + input + "'");
    json in;
    try {
        in = json::parse(f);
    } catch (const json::exception& e) {
        throw UsageError(std::string("tree: ") + e.what());
    }
    auto labels = in.at("ends").get<std::vector<std::string>>();
    bool lex = false;
    for (const auto& [k, v] : in.at("values").items()) lex = lex || v.get<std::string>().find('(') != std::string::npos;
    if (lex) return run_tree<Lex>(in, labels, base, parse_lex, format, output);
    return run_tree<Rational>(in, labels, base, parse_rational, format, output);
}

int p_of_case(const std::string& c) {
    if (c == "B" || c == "F") return 2;
    if (c == "G") return 3;
    throw UsageError("sr: --case must be B, F or G");
}

int cmd_sr_norm(const std::string& c, const std::vector<std::string>& args, const std::string& output) {
    int p = p_of_case(c);
    std::vector<Laurent> v;
    for (const auto& a : args) v.push_back(Laurent::parse(a, p));
    json j;
    j["case"] = c;
    j["args"] = args;
    if (p == 2) {
        if (v.size() != 2) throw UsageError("sr norm: cases B and F take two arguments (s, t)");
        auto R = norm_R(v[0], v[1]);
        j["norm"] = R.str();
        j["nu"] = R.nu().str();
        j["closed_form"] = nu_R_closed(v[0], v[1]).str();
    } else {
        if (v.size() != 3) throw UsageError("sr norm: case G takes three arguments (r, s, t)");
        auto N = norm_N(v[0], v[1], v[2]);
        j["norm"] = N.str();
        j["nu"] = N.nu().str();
        j["closed_form"] = nu_N_closed(v[0], v[1], v[2]).str();
    }
    bool ok = j["nu"] == j["closed_form"];
    j["agree"] = ok;
    emit(j, output);
    return ok ? 0 : 1;
}

int cmd_sr_check(const std::string& c, std::size_t samples, std::uint64_t seed, const std::string& output) {
    int p = p_of_case(c);
    std::mt19937_64 rng(seed);
    json identities = json::array();
    bool ok = true;
    auto record = [&](const std::string& name, std::size_t n, const std::vector<std::string>& failures) {
        json f = json::array();
        for (std::size_t i = 0; i < failures.size() && i < 5; ++i) f.push_back(failures[i]);
        identities.push_back({{"identity", name}, {"samples", n}, {"failures", f}});
        ok = ok && failures.empty();
    };
    std::vector<std::string> closed, product, anis, theta, group;
    if (p == 2) {
        auto gen = [&](std::mt19937_64& r) { return GroupK{random_laurent(r, 2, 3, 3), random_laurent(r, 2, 3, 3)}; };
        for (std::size_t i = 0; i < samples; ++i) {
            auto g = gen(rng), h = gen(rng), k = gen(rng);
            if (phi_K(g) != nu_R_closed(g.s, g.t)) closed.push_back(g.s.str() + " | " + g.t.str());
            if (phi_K(g * h) < std::min(phi_K(g), phi_K(h))) product.push_back(g.s.str() + " | " + g.t.str());
            if (!(g == GroupK::identity()) && phi_K(g).is_infinite()) anis.push_back(g.s.str() + " | " + g.t.str());
            if (g.s.theta().nu() != detail::scale_nu(Exponent(0, 1, 2), g.s.nu())) theta.push_back(g.s.str());
            if (!((g * h) * k == g * (h * k)) || !(g * g.inverse() == GroupK::identity())) group.push_back(g.s.str());
        }
        auto v1 = check_V1<GroupK>(NormValue(Exponent(0, 1, 2)), samples, rng, phi_K, gen);
        record("V1 at sqrt2", v1.pairs, v1.failures);
    } else {
        auto gen = [&](std::mt19937_64& r) {
            return GroupT{random_laurent(r, 3, 3, 2), random_laurent(r, 3, 3, 2), random_laurent(r, 3, 3, 2)};
        };
        for (std::size_t i = 0; i < samples; ++i) {
            auto g = gen(rng), h = gen(rng), k = gen(rng);
            if (phi_T(g) != nu_N_closed(g.r, g.s, g.t)) closed.push_back(g.r.str() + " | " + g.s.str() + " | " + g.t.str());
            if (phi_T(g * h) < std::min(phi_T(g), phi_T(h))) product.push_back(g.r.str());
            if (!(g == GroupT::identity()) && phi_T(g).is_infinite()) anis.push_back(g.r.str());
            if (g.r.theta().nu() != detail::scale_nu(Exponent(0, 1, 3), g.r.nu())) theta.push_back(g.r.str());
            if (!((g * h) * k == g * (h * k)) || !(g * g.inverse() == GroupT::identity())) group.push_back(g.r.str());
        }
        auto v1 = check_V1<GroupT>(NormValue(Exponent(2, 0, 3)), samples, rng, phi_T, gen);
        record("V1 at 2", v1.pairs, v1.failures);
    }
    record("closed form", samples, closed);
    record("product inequality", samples, product);
    record("anisotropy", samples, anis);
    record("theta invariance", samples, theta);
    record("group laws", samples, group);
    json j;
    j["case"] = c;
    j["seed"] = seed;
    j["status"] = ok ? "pass" : "fail";
    j["identities"] = identities;
    emit(j, output);
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weylkit: exact affine-building combinatorics"};
    app.require_subcommand(1);
    std::string type, point, output, svg, format = "json", target, word, input, base, sr_case, seed_text;
    std::size_t max_gallery = 12, samples = 1000;
    std::uint64_t seed = 1;
    bool timings = false;
    std::vector<std::string> sr_args;

    auto* rootsys = app.add_subcommand("rootsys", "Cartan, Gram and positive roots of a root system");
    rootsys->add_option("--type", type, "A_n, B_n, C_n, G2, F4 or I2(m)")->required();
    rootsys->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    rootsys->add_option("--output", output);

    auto* hull = app.add_subcommand("hull", "Enumerate A^Q(x)");
    hull->add_option("--type", type)->required();
    hull->add_option("--point", point, "simple-root coordinates, e.g. 3,3")->required();
    hull->add_option("--svg", svg);
    hull->add_option("--output", output);

    auto* fold = app.add_subcommand("fold", "Fold the straight path to w0 x into a path ending at y");
    fold->add_option("--type", type)->required();
    fold->add_option("--point", point)->required();
    fold->add_option("--target", target)->required();
    fold->add_option("--word", word, "reduced word for w0, 1-based, e.g. 1,2,1");
    fold->add_option("--svg", svg);
    fold->add_option("--output", output);

    auto* verify = app.add_subcommand("verify-convexity", "Compare path, gallery and hull endpoint sets");
    verify->add_option("--type", type)->required();
    verify->add_option("--point", point)->required();
    verify->add_option("--max-gallery", max_gallery, "skip gallery enumeration beyond this length");
    verify->add_flag("--timings", timings);
    verify->add_option("--output", output);

    auto* tree = app.add_subcommand("tree", "Projective valuation to rooted tree datum and back");
    tree->add_option("--input", input)->required()->check(CLI::ExistingFile);
    tree->add_option("--base", base, "three ends, e.g. a,b,c");
    tree->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    tree->add_option("--output", output);

    auto* sr = app.add_subcommand("sr", "Suzuki-Ree norms and valuation identities");
    sr->require_subcommand(1);
    auto* norm = sr->add_subcommand("norm", "nu of R or N and the closed form");
    norm->add_option("--case", sr_case)->required()->check(CLI::IsMember({"B", "F", "G"}));
    norm->add_option("--args", sr_args, "Laurent literals like \"x^{1+2r}+x\"")->required();
    norm->add_option("--output", output);
    auto* check = sr->add_subcommand("check", "Sampled property report");
    check->add_option("--case", sr_case)->required()->check(CLI::IsMember({"B", "F", "G"}));
    check->add_option("--samples", samples);
    check->add_option("--seed", seed);
    check->add_option("--output", output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*rootsys) return cmd_rootsys(type, format, output);
        if (*hull) return cmd_hull(type, point, svg, output);
        if (*fold) return cmd_fold(type, point, target, word, svg, output);
        if (*verify) return cmd_verify(type, point, max_gallery, timings, output);
        if (*tree) return cmd_tree(input, base, format, output);
        if (*norm) return cmd_sr_norm(sr_case, sr_args, output);
        if (*check) return cmd_sr_check(sr_case, samples, seed, output);
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << " (raise WEYLKIT_CAP to allow more)\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n" << app.help();
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
