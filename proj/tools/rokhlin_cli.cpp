#include "rokhlin/aperiodicity.hpp"
#include "rokhlin/chain_search.hpp"
#include "rokhlin/conjugation.hpp"
#include "rokhlin/errors.hpp"
#include "rokhlin/serialization.hpp"
#include "rokhlin/tower.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace rokhlin;

namespace {

// exit codes
constexpr int kValid = 0;
constexpr int kInvalid = 1;
constexpr int kUsage = 2;

void emit(const Json& j, const std::string& out) {
    const std::string text = j.dump(2) + "\n";
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw DomainError("cannot write " + out);
    f << text;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw DomainError("cannot write " + path);
    f << text;
}

int run_check(const SystemSpec& sys, int nmax, std::size_t guard, const std::string& out) {
    if (nmax < 1) throw DomainError("--nmax must be >= 1");
    Json j;
    const auto pres = verify_measure_preservation(sys);
    j["preservation"] = to_json(pres);
    const bool onto = check_surjectivity(sys.map);
    j["surjective"] = onto;

    // defects one power at a time so a guard overflow keeps what was certified
    Json defects = Json::array();
    bool aperiodic = true;
    int reached = 0;
    std::string stopped;
    PiecewiseAffineMap power = sys.map;
    for (int n = 1; n <= nmax; ++n) {
        try {
            if (n > 1) power = compose(sys.map, power, guard);
            const auto r = defect_of_power(sys, power, n, guard);
            defects.push_back(to_json(r));
            aperiodic = aperiodic && r.nigh_aperiodic();
            reached = n;
        } catch (const ComplexityError& e) {
            stopped = "n=" + std::to_string(n) + ": " + e.what();
            break;
        }
    }
    j["nmax"] = nmax;
    j["horizon_reached"] = reached;
    j["defects"] = defects;
    j["nigh_aperiodic_up_to_horizon"] = aperiodic;
    const bool valid = pres.preserved && onto && aperiodic && reached == nmax;
    j["valid"] = valid;
    emit(j, out);

    if (!pres.preserved)
        std::cerr << "error[not-preserving]: discrepancy " << pres.max_discrepancy.str() << " at x="
                  << (pres.witness ? pres.witness->str() : "?") << "\n";
    if (!onto) std::cerr << "error[domain]: map is not onto [0,1)\n";
    if (!aperiodic) std::cerr << "error[defect-positive]: positive defect below n=" << reached + 1 << "\n";
    if (!stopped.empty()) std::cerr << "error[complexity]: defect horizon stopped at " << stopped << "\n";
    return valid ? kValid : kInvalid;
}

int run_chain(const SystemSpec& sys, int m, int depth, std::size_t guard, const std::string& out) {
    ChainSearchOptions opts;
    opts.guard = guard;
    const auto cert = find_chain(sys, m, IntervalSet::full(), depth, opts);
    emit(to_json(cert), out);
    return cert.valid() ? kValid : kInvalid;
}

int run_tower(const SystemSpec& sys, int n, const Rational& eps, int depth, int k, std::size_t guard,
              const std::string& out, const std::string& csv) {
    TowerOptions opts;
    opts.guard = guard;
    opts.search.guard = guard;
    const auto r = construct_tower(sys, n, eps, k, depth, opts);
    emit(to_json(r), out);
    if (!csv.empty()) write_text(csv, levels_csv(r.tower));
    if (!r.certified()) {
        std::cerr << "error[bound-not-met]: tower measure " << r.tower_measure().str() << " does not exceed 1-"
                  << eps.str() << "\n";
        return kInvalid;
    }
    return kValid;
}

int run_normalize(const SystemSpec& sys, std::size_t guard, const std::string& out) {
    const auto pair = normalize_to_lebesgue(sys, guard);
    if (out.empty()) {
        emit(to_json(pair), "");
    } else {
        emit(to_json(pair.normalized), out);
        emit(to_json(pair.preservation), "");
    }
    if (!pair.preservation.preserved) {
        std::cerr << "error[not-preserving]: normalized map does not preserve Lebesgue measure\n";
        return kInvalid;
    }
    return kValid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Rokhlin towers for piecewise-affine interval maps"};
    app.require_subcommand(1);
    std::size_t guard = kDefaultBranchGuard;
    app.add_option("--guard", guard, "branch limit for composed maps")->capture_default_str();

    std::string system_path, out, csv, eps_text = "1/4";
    int nmax = 16, m = 2, depth = 8, n = 2, k = 64;

    auto* check = app.add_subcommand("check", "preservation, surjectivity and defects up to --nmax");
    check->add_option("system", system_path)->required()->check(CLI::ExistingFile);
    check->add_option("--nmax", nmax)->capture_default_str();
    check->add_option("--out", out);

    auto* chain = app.add_subcommand("chain", "search for an m-chain");
    chain->add_option("system", system_path)->required()->check(CLI::ExistingFile);
    chain->add_option("--m", m)->required();
    chain->add_option("--depth", depth)->capture_default_str();
    chain->add_option("--out", out);

    int tower_depth = 12;
    auto* tower = app.add_subcommand("tower", "build and certify an n-tower of measure > 1-epsilon");
    tower->add_option("system", system_path)->required()->check(CLI::ExistingFile);
    tower->add_option("--n", n)->capture_default_str();
    tower->add_option("--epsilon", eps_text)->capture_default_str();
    tower->add_option("--depth", tower_depth)->capture_default_str();
    tower->add_option("--K", k)->capture_default_str();
    tower->add_option("--out", out);
    tower->add_option("--levels-csv", csv);

    auto* normalize = app.add_subcommand("normalize", "conjugate to a Lebesgue-preserving system");
    normalize->add_option("system", system_path)->required()->check(CLI::ExistingFile);
    normalize->add_option("--out", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kValid : kUsage;
    }

    try {
        const SystemSpec sys = load_system(system_path);
        if (*check) return run_check(sys, nmax, guard, out);
        if (*chain) return run_chain(sys, m, depth, guard, out);
        if (*tower) return run_tower(sys, n, Rational::parse(eps_text), tower_depth, k, guard, out, csv);
        return run_normalize(sys, guard, out);
    } catch (const ParseError& e) {
        std::cerr << "error[" << e.kind() << "]: " << e.what() << "\n";
        return kUsage;
    } catch (const FormatError& e) {
        std::cerr << "error[" << e.kind() << "]: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error[" << e.kind() << "]: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error[io]: " << e.what() << "\n";
        return kInvalid;
    }
}
