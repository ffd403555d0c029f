// Command line front end: evaluate the big-cell function, factor group
// elements, and run the identity suites with deterministic seeds.
//
// Exit codes: 0 success / all checks passed, 1 an identity was violated,
// 2 usage or input error, 3 the bit-length guard tripped.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "bigcell/duality.hpp"
#include "bigcell/json_io.hpp"
#include "bigcell/symmspace.hpp"

using namespace bigcell;

namespace {

struct GroupChoice {
    std::string token;
    std::string partition;
    int p = 3;
    int e = 1;

    ParabolicDatum datum() const {
        std::string head = token, suffix;
        if (std::size_t dash = token.find('-'); dash != std::string::npos) {
            head = token.substr(0, dash);
            suffix = token.substr(dash + 1);
        }
        std::string fam, digits;
        for (char c : head) {
            if (std::isdigit(static_cast<unsigned char>(c))) digits.push_back(c);
            else fam.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        }
        if (fam.empty() || digits.empty())
            throw std::invalid_argument("cannot parse --group \"" + token + "\"");
        Family family = family_from_name(fam);
        int n = std::stoi(digits);

        std::string part = partition.empty() ? suffix : partition;
        if (family == Family::Sp || part == "siegel") return ParabolicDatum::siegel(n);
        std::vector<int> comp;
        if (part.empty() || part == "borel") {
            comp.assign(static_cast<std::size_t>(n), 1);
        } else if (part.find(',') != std::string::npos) {
            std::size_t pos = 0;
            while (pos < part.size()) {
                std::size_t next = part.find(',', pos);
                if (next == std::string::npos) next = part.size();
                comp.push_back(std::stoi(part.substr(pos, next - pos)));
                pos = next + 1;
            }
        } else {
            for (char c : part) {
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw std::invalid_argument("cannot parse partition \"" + part + "\"");
                comp.push_back(c - '0');
            }
        }
        return ParabolicDatum::make(family, n, comp);
    }
};

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& err) {
        throw std::invalid_argument(path + ": " + err.what());
    }
}

GroupElement load_element(const std::string& path) {
    return group_element_from_json(load_json(path));
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << std::endl; }

ordered_json report_envelope(const SuiteReport& rep, const GroupChoice& gc,
                             std::uint64_t seed, int samples) {
    ordered_json j = report_to_json(rep);
    ordered_json out;
    out["suite"] = j["suite"];
    out["group"] = gc.token + (gc.partition.empty() ? "" : "/" + gc.partition);
    out["p"] = gc.p;
    out["e"] = gc.e;
    out["seed"] = seed;
    out["samples"] = samples;
    out["checks"] = j["checks"];
    out["pass"] = j["pass"];
    return out;
}

RationalRep parse_sigma(const std::string& text, const ParabolicDatum& d) {
    nlohmann::json j;
    if (!text.empty() && text.front() == '{') j = nlohmann::json::parse(text);
    else j = load_json(text);
    std::string type = j.at("type").get<std::string>();
    if (type == "det_power") {
        std::vector<long> weights = j.at("weights").get<std::vector<long>>();
        return RationalRep::det_power(d, weights);
    }
    if (type == "sym")
        return RationalRep::sym_power(d, j.at("k").get<int>(), j.at("block").get<int>());
    if (type == "f") return RationalRep::f_character(d);
    throw std::invalid_argument("unknown representation type \"" + type + "\"");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact big-cell machinery for GL(n), SL(n) and Sp(2n) over Q_p"};
    app.require_subcommand(1);

    GroupChoice gc;
    long guard = -1;
    app.add_option("--guard-bits", guard, "bit-length guard for exact arithmetic");

    auto add_group_opts = [&](CLI::App* cmd) {
        cmd->add_option("--group", gc.token, "group datum, e.g. sl2-borel, sl3-21, gl4-22, sp4-siegel")
            ->required();
        cmd->add_option("--partition", gc.partition, "composition, e.g. 2,1 (or borel / siegel)");
        cmd->add_option("--p", gc.p, "residue prime (default 3)");
        cmd->add_option("--e", gc.e, "ramification of the coefficient field (default 1)");
    };

    std::string in_path, g_path, u_path, reps_path, sigma_text;
    long level_m = 0;
    int samples = 100;
    std::uint64_t seed = 0;
    bool closed_form = false;

    CLI::App* feval = app.add_subcommand("f-eval", "evaluate the big-cell function");
    add_group_opts(feval);
    feval->add_option("--in", in_path, "matrix JSON file")->required();
    feval->add_flag("--closed-form", closed_form, "use the closed determinant formula");

    CLI::App* factorize = app.add_subcommand("factorize", "big-cell factorization u- l u+");
    add_group_opts(factorize);
    factorize->add_option("--in", in_path, "matrix JSON file")->required();

    CLI::App* lemma = app.add_subcommand("lemma-suite", "structure checks for f");
    add_group_opts(lemma);
    lemma->add_option("--samples", samples, "samples per Weyl element");
    lemma->add_option("--seed", seed, "RNG seed");

    CLI::App* cocycle = app.add_subcommand("cocycle-test", "automorphy identity checks");
    add_group_opts(cocycle);
    cocycle->add_option("--samples", samples, "number of random triples");
    cocycle->add_option("--seed", seed, "RNG seed");

    CLI::App* star = app.add_subcommand("star", "apply g * u");
    add_group_opts(star);
    star->add_option("--g", g_path, "group element JSON file")->required();
    star->add_option("--u", u_path, "point JSON file")->required();

    CLI::App* jfac = app.add_subcommand("jfactor", "automorphy factor j(g, u)");
    add_group_opts(jfac);
    jfac->add_option("--g", g_path, "group element JSON file")->required();
    jfac->add_option("--u", u_path, "point JSON file")->required();

    CLI::App* omega = app.add_subcommand("omega-check", "affinoid membership of a point");
    add_group_opts(omega);
    omega->add_option("--u", u_path, "point JSON file")->required();
    omega->add_option("--m", level_m, "affinoid level")->required();
    omega->add_option("--reps", reps_path, "JSON array of representative matrices");

    CLI::App* dual = app.add_subcommand("duality-suite", "duality operator checks");
    add_group_opts(dual);
    dual->add_option("--sigma", sigma_text, "representation descriptor (inline JSON or file)")
        ->required();
    dual->add_option("--samples", samples, "sample points per check");
    dual->add_option("--seed", seed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (const char* env = std::getenv("BIGCELL_GUARD_BITS"); env != nullptr && guard < 0)
        guard = std::atol(env);
    if (guard > 0) set_guard_bits(static_cast<std::size_t>(guard));

    try {
        ParabolicDatum d = gc.datum();
        const FieldRef field{gc.p, gc.e};

        if (*feval) {
            GroupElement g = load_element(in_path);
            Scalar value = closed_form ? f_closed_form(g, d) : f_minor(g, d);
            ordered_json out;
            out["value"] = value.str();
            out["valuation"] = value.valuation().str();
            emit(out);
            return 0;
        }
        if (*factorize) {
            GroupElement g = load_element(in_path);
            BigCellFactorization parts = big_cell_factor(g, d);
            ordered_json out;
            out["u_minus"] = group_element_to_json(GroupElement{g.family, g.n, parts.u_minus});
            out["levi"] = group_element_to_json(GroupElement{g.family, g.n, parts.levi});
            out["u_plus"] = group_element_to_json(GroupElement{g.family, g.n, parts.u_plus});
            emit(out);
            return 0;
        }
        if (*lemma) {
            Rng rng(seed);
            SuiteReport rep = verify_lemma_f(d, samples, rng, gc.p);
            emit(report_envelope(rep, gc, seed, samples));
            return rep.pass() ? 0 : 1;
        }
        if (*cocycle) {
            Rng rng(seed);
            SuiteReport rep = verify_cocycle_suite(d, samples, rng, field);
            emit(report_envelope(rep, gc, seed, samples));
            return rep.pass() ? 0 : 1;
        }
        if (*star || *jfac) {
            GroupElement g = load_element(g_path);
            OmegaPoint u = make_omega_point(d, load_element(u_path).m);
            if (*star) {
                OmegaPoint moved = star_action(g, u, d);
                emit(group_element_to_json(GroupElement{g.family, g.n, moved.m}));
            } else {
                GroupElement j = automorphy_factor(g, u, d);
                emit(group_element_to_json(j));
            }
            return 0;
        }
        if (*omega) {
            OmegaPoint u = make_omega_point(d, load_element(u_path).m);
            std::vector<GroupElement> reps = reps_path.empty()
                                                 ? enumerate_reps(d, gc.p, level_m)
                                                 : reps_from_json(load_json(reps_path));
            ordered_json out;
            out["m"] = level_m;
            out["reps"] = reps.size();
            bool member = true;
            for (const auto& ghat : reps) {
                if (in_ball(u, level_m, ghat, d)) {
                    member = false;
                    out["violation"] = group_element_to_json(ghat);
                    break;
                }
            }
            out["member"] = member;
            emit(out);
            return 0;
        }
        if (*dual) {
            RationalRep sigma = parse_sigma(sigma_text, d);
            Rng rng(seed);
            SuiteReport rep = duality_suite(sigma, samples, rng, field);
            emit(report_envelope(rep, gc, seed, samples));
            return rep.pass() ? 0 : 1;
        }
    } catch (const GuardTripped& e) {
        std::cerr << "guard: " << e.what() << std::endl;
        return 3;
    } catch (const NotInBigCell& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    }
    return 2;
}
