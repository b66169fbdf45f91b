#include "conred/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "conred/io.hpp"

namespace conred::cli {

namespace {

using io::json;

struct CommonOpts {
    std::string output;
    std::string format = "json";
    bool strict = false;
};

RayDir parse_nu(const std::string& text, std::pair<std::int64_t, std::int64_t>& raw) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        raise(errc::malformed_input, "--nu expects two comma-separated integers, e.g. --nu 3,1");
    try {
        raw.first = std::stoll(text.substr(0, comma));
        raw.second = std::stoll(text.substr(comma + 1));
    } catch (const std::exception&) {
        raise(errc::malformed_input, "--nu expects two comma-separated integers, e.g. --nu 3,1");
    }
    return RayDir{raw.first, raw.second};
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoll(item));
        } catch (const std::exception&) {
            raise(errc::malformed_input, "expected a comma-separated integer list");
        }
    }
    if (out.empty())
        raise(errc::malformed_input, "expected a nonempty comma-separated integer list");
    return out;
}

std::string verdict_name(const TransversalityReport& r) {
    switch (r.verdict) {
    case Verdict::transverse: return "transverse";
    case Verdict::critical: return "critical";
    case Verdict::misses_image: return "misses_image";
    }
    return "unknown";
}

void render_table(const json& j, std::ostream& os, int indent = 0) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_object() || (value.is_array() && !value.empty() && value.front().is_structured())) {
                os << pad << key << ":\n";
                render_table(value, os, indent + 2);
            } else {
                os << pad << key << "  " << value.dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& item : j) {
            const bool flat = !item.is_structured() ||
                              std::all_of(item.begin(), item.end(), [](const json& x) { return !x.is_structured(); });
            if (flat) {
                os << pad << item.dump() << "\n";
            } else {
                render_table(item, os, indent);
                os << pad << "-\n";
            }
        }
    } else {
        os << pad << j.dump() << "\n";
    }
}

void emit(const json& j, const CommonOpts& opts, std::ostream& out) {
    std::ostringstream buffer;
    if (opts.format == "table")
        render_table(j, buffer);
    else
        buffer << j.dump(2) << "\n";
    if (!opts.output.empty()) {
        std::ofstream file(opts.output);
        if (!file)
            raise(errc::malformed_input, "cannot open output file: " + opts.output);
        file << buffer.str();
    } else {
        out << buffer.str();
    }
}

bool is_malformed(errc code) {
    return code == errc::malformed_input || code == errc::empty_descriptor ||
           code == errc::negative_symmetric_degree;
}

json nu_json(const std::pair<std::int64_t, std::int64_t>& raw, RayDir nu) {
    return json{{"raw", json::array({raw.first, raw.second})}, {"primitive", json::array({nu.x, nu.y})}};
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact transversality combinatorics and conic-reduction classification for U(2) actions"};
    app.require_subcommand(1);
    app.fallthrough();

    CommonOpts opts;
    app.add_option("--output", opts.output, "write the result to a file instead of stdout");
    app.add_option("--format", opts.format, "output format: json or table")
        ->check(CLI::IsMember({"json", "table"}));
    app.add_flag("--strict", opts.strict, "exit 1 on critical or degenerate verdicts");

    std::string rep_path, nu_text, base_text;
    std::int64_t samples = 1000;
    std::uint64_t seed = 12345;
    double tol_alg = 1e-12, tol_eig = 1e-9, fd_step = 1e-4;

    CLI::App* analyze = app.add_subcommand("analyze", "structural predicates of a descriptor");
    analyze->add_option("rep", rep_path, "descriptor JSON file")->required();

    CLI::App* polytope = app.add_subcommand("polytope", "exact moment polytope vertices");
    polytope->add_option("rep", rep_path, "descriptor JSON file")->required();

    CLI::App* rays = app.add_subcommand("rays", "critical rays with witnesses and wedges");
    rays->add_option("rep", rep_path, "descriptor JSON file")->required();

    CLI::App* transversal = app.add_subcommand("transversal", "transversality verdicts for a ray");
    transversal->add_option("rep", rep_path, "descriptor JSON file")->required();
    transversal->add_option("--nu", nu_text, "ray direction, e.g. 3,1")->required();

    CLI::App* reduce = app.add_subcommand("reduce", "classify the conic reduction along a ray");
    reduce->add_option("rep", rep_path, "descriptor JSON file")->required();
    reduce->add_option("--nu", nu_text, "ray direction, e.g. 3,1")->required();

    CLI::App* betti = app.add_subcommand("betti", "Betti tables of the conic reduction");
    betti->add_option("--base", base_text, "base Betti table, e.g. 1,0,1")->required();

    CLI::App* verify = app.add_subcommand("verify", "seeded numeric verification suite");
    verify->add_option("rep", rep_path, "descriptor JSON file")->required();
    verify->add_option("--nu", nu_text, "ray direction, e.g. 3,1");
    verify->add_option("--samples", samples, "samples per property");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--tol-alg", tol_alg, "tolerance for algebraic identities");
    verify->add_option("--tol-eig", tol_eig, "tolerance for eigenvalue checks");
    verify->add_option("--fd-step", fd_step, "finite-difference step");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("conred");
    for (const std::string& a : args)
        argv.push_back(a.c_str());

    try {
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::CallForHelp& e) {
            out << app.help();
            return 0;
        } catch (const CLI::ParseError& e) {
            raise(errc::malformed_input, e.what());
        }

        if (analyze->parsed()) {
            const RepDescriptor rep = io::load_descriptor(rep_path);
            emit(json{{"generic", is_generic(rep)},
                      {"uniform", is_uniform(rep)},
                      {"moment_never_zero", moment_never_zero(rep)},
                      {"dim", rep.dim()},
                      {"index_count", static_cast<std::int64_t>(index_set(rep).size())}},
                 opts, out);
            return 0;
        }

        if (polytope->parsed()) {
            const RepDescriptor rep = io::load_descriptor(rep_path);
            emit(io::polygon_to_json(moment_polytope(rep)), opts, out);
            return 0;
        }

        if (rays->parsed()) {
            const RepDescriptor rep = io::load_descriptor(rep_path);
            emit(io::rays_to_json(critical_rays(rep), wedges(rep)), opts, out);
            return 0;
        }

        if (transversal->parsed()) {
            const RepDescriptor rep = io::load_descriptor(rep_path);
            std::pair<std::int64_t, std::int64_t> raw;
            const RayDir nu = parse_nu(nu_text, raw);
            const TransversalityReport psi = psi_transverse(rep, nu);
            json j{{"nu", nu_json(raw, nu)}, {"psi", verdict_name(psi)}};
            bool degenerate = psi.verdict == Verdict::critical;
            try {
                const TransversalityReport phi = phi_transverse(rep, nu);
                j["phi"] = verdict_name(phi);
                degenerate = degenerate || phi.verdict == Verdict::critical;
            } catch (const Error& e) {
                if (e.code() != errc::diagonal_ray)
                    throw;
                j["phi"] = "diagonal_ray_unsupported";
                degenerate = true;
            }
            if (psi.verdict == Verdict::critical)
                j["witnesses"] = io::index_pairs_to_json(psi.witnesses);
            emit(j, opts, out);
            return opts.strict && degenerate ? 1 : 0;
        }

        if (reduce->parsed()) {
            const RepDescriptor rep = io::load_descriptor(rep_path);
            std::pair<std::int64_t, std::int64_t> raw;
            const RayDir nu = parse_nu(nu_text, raw);
            const VarietyDescriptor variety = classify(rep, nu);
            json j = io::variety_to_json(variety);
            j["nu"] = nu_json(raw, nu);
            if (is_uniform(rep)) {
                json qw = json::array();
                for (const auto& [idx, w] : quotient_weights_uniform(rep))
                    qw.push_back(json{{"index", json::array({idx.a, idx.j})}, {"weight", w}});
                j["quotient_weights"] = std::move(qw);
            }
            if (rep.r() == 1 && rep.summand(1).k >= 2 && nu.y > 0 && nu.x > (rep.summand(1).k - 1) * nu.y) {
                const IsotopyEndpoints iso = isotopy_endpoints(rep.summand(1).k, nu);
                j["isotopy"] = json{{"ambient", io::wps_to_json(iso.ambient)},
                                    {"divisor", io::wps_to_json(iso.divisor)},
                                    {"divisor_advisory", "valid for nu1/nu2 sufficiently large"}};
            }
            emit(j, opts, out);
            return 0;
        }

        if (betti->parsed()) {
            const BettiTable base = parse_int_list(base_text);
            for (const std::int64_t b : base)
                if (b < 0)
                    raise(errc::malformed_input, "Betti numbers must be nonnegative");
            emit(json{{"base", base},
                      {"conic_reduction", betti_conic_reduction(base)},
                      {"product_p1", betti_product_P1(base)}},
                 opts, out);
            return 0;
        }

        if (verify->parsed()) {
            const RepDescriptor rep = io::load_descriptor(rep_path);
            std::optional<RayDir> nu;
            json jnu;
            if (!nu_text.empty()) {
                std::pair<std::int64_t, std::int64_t> raw;
                nu = parse_nu(nu_text, raw);
                jnu = nu_json(raw, *nu);
            }
            SampleConfig cfg;
            cfg.samples = samples;
            cfg.seed = seed;
            cfg.tol_alg = tol_alg;
            cfg.tol_eig = tol_eig;
            cfg.fd_step = fd_step;
            const std::vector<PropertyReport> reports = run_suite(rep, nu, cfg);
            bool all_pass = true;
            json jr = json::array();
            for (const PropertyReport& r : reports) {
                all_pass = all_pass && r.pass;
                jr.push_back(io::report_to_json(r));
            }
            json j;
            if (nu)
                j["nu"] = jnu;
            j["samples"] = cfg.samples;
            j["seed"] = cfg.seed;
            j["reports"] = std::move(jr);
            j["all_pass"] = all_pass;
            emit(j, opts, out);
            return all_pass ? 0 : 1;
        }

        raise(errc::malformed_input, "no subcommand given");
    } catch (const Error& e) {
        err << io::error_to_json(e).dump(2) << "\n";
        return is_malformed(e.code()) ? 2 : 1;
    } catch (const std::exception& e) {
        err << json{{"error", json{{"code", "Internal"}, {"message", e.what()}}}}.dump(2) << "\n";
        return 1;
    }
}

} // namespace conred::cli
