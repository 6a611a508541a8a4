#include "gkbo/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace gkbo {

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("config: " + what); }

double to_double(const std::string& key, const std::string& v)
{
    std::size_t pos = 0;
    double x = 0.0;
    try {
        x = std::stod(v, &pos);
    } catch (const std::exception&) {
        bad("key '" + key + "': cannot parse number '" + v + "'");
    }
    if (pos != v.size()) bad("key '" + key + "': trailing junk in '" + v + "'");
    return x;
}

int to_int(const std::string& key, const std::string& v)
{
    const double x = to_double(key, v);
    const int i = static_cast<int>(x);
    if (static_cast<double>(i) != x) bad("key '" + key + "': expected integer, got '" + v + "'");
    return i;
}

bool to_bool(const std::string& key, const std::string& v)
{
    if (v == "true" || v == "1" || v == "on") return true;
    if (v == "false" || v == "0" || v == "off") return false;
    bad("key '" + key + "': expected boolean, got '" + v + "'");
}

std::uint64_t to_u64(const std::string& key, const std::string& v)
{
    std::size_t pos = 0;
    std::uint64_t x = 0;
    try {
        x = std::stoull(v, &pos);
    } catch (const std::exception&) {
        bad("key '" + key + "': cannot parse seed '" + v + "'");
    }
    if (pos != v.size()) bad("key '" + key + "': trailing junk in '" + v + "'");
    return x;
}

Method parse_method(const std::string& v)
{
    if (v == "gkbo") return Method::GKBO;
    if (v == "kbo") return Method::KBO;
    if (v == "ga") return Method::GA;
    if (v == "ga_modified") return Method::GAModified;
    bad("unknown method '" + v + "' (expected gkbo|kbo|ga|ga_modified)");
}

Diffusion parse_diffusion(const std::string& v)
{
    if (v == "isotropic") return Diffusion::Isotropic;
    if (v == "anisotropic") return Diffusion::Anisotropic;
    bad("unknown diffusion '" + v + "' (expected isotropic|anisotropic)");
}

ConsensusSelector parse_consensus(const std::string& v)
{
    if (v == "all") return ConsensusSelector::All;
    if (v == "followers") return ConsensusSelector::FollowersOnly;
    if (v == "leaders") return ConsensusSelector::LeadersOnly;
    bad("unknown consensus '" + v + "' (expected all|followers|leaders)");
}

TransitionPolicy::Kind parse_strategy(const std::string& v)
{
    if (v == "random") return TransitionPolicy::Kind::Random;
    if (v == "weighted") return TransitionPolicy::Kind::Weighted;
    if (v == "mixed") return TransitionPolicy::Kind::Mixed;
    bad("unknown strategy '" + v + "' (expected random|weighted|mixed)");
}

RunConfig::Init parse_init(const std::string& v)
{
    if (v == "uniform_box") return RunConfig::Init::UniformBox;
    if (v == "gaussian_box") return RunConfig::Init::GaussianBox;
    bad("unknown init '" + v + "' (expected uniform_box|gaussian_box)");
}

const std::map<std::string, std::string>& key_sections()
{
    static const std::map<std::string, std::string> sections = {
        {"method", "dynamics"},        {"nu_f", "dynamics"},
        {"nu_l", "dynamics"},          {"sigma_f", "dynamics"},
        {"alpha", "dynamics"},         {"epsilon", "dynamics"},
        {"diffusion", "dynamics"},     {"consensus", "dynamics"},
        {"interaction_prob", "dynamics"},
        {"strategy", "transition"},    {"pi_fl", "transition"},
        {"pi_lf", "transition"},       {"rho1_target", "transition"},
        {"p_bar", "transition"},       {"weighted_damped", "transition"},
        {"objective", "experiment"},   {"dimension", "experiment"},
        {"n_particles", "experiment"}, {"max_iterations", "experiment"},
        {"j_stall", "experiment"},     {"delta_stall", "experiment"},
        {"success_tol", "experiment"}, {"init", "experiment"},
        {"seed", "experiment"},        {"trace_every", "experiment"},
        {"stall_reset", "experiment"}, {"runs", "experiment"},
    };
    return sections;
}

} // namespace

std::string config_key_section(const std::string& key)
{
    auto it = key_sections().find(key);
    return it == key_sections().end() ? std::string{} : it->second;
}

void set_config_key(RunConfig& cfg, const std::string& key, const std::string& value)
{
    if (key == "method") cfg.dynamics.method = parse_method(value);
    else if (key == "nu_f") cfg.dynamics.nu_f = to_double(key, value);
    else if (key == "nu_l") cfg.dynamics.nu_l = to_double(key, value);
    else if (key == "sigma_f") cfg.dynamics.sigma_f = to_double(key, value);
    else if (key == "alpha") cfg.dynamics.alpha = to_double(key, value);
    else if (key == "epsilon") cfg.dynamics.epsilon = to_double(key, value);
    else if (key == "diffusion") cfg.dynamics.diffusion = parse_diffusion(value);
    else if (key == "consensus") cfg.dynamics.consensus = parse_consensus(value);
    else if (key == "interaction_prob") cfg.dynamics.interaction_prob = to_double(key, value);
    else if (key == "strategy") cfg.transition.kind = parse_strategy(value);
    else if (key == "pi_fl") cfg.transition.pi_fl = to_double(key, value);
    else if (key == "pi_lf") cfg.transition.pi_lf = to_double(key, value);
    else if (key == "rho1_target") cfg.transition.rho1_target = to_double(key, value);
    else if (key == "p_bar") cfg.transition.p_bar = to_double(key, value);
    else if (key == "weighted_damped") cfg.transition.weighted_damped = to_bool(key, value);
    else if (key == "objective") cfg.objective_id = value;
    else if (key == "dimension") cfg.dimension = to_int(key, value);
    else if (key == "n_particles") cfg.n_particles = to_int(key, value);
    else if (key == "max_iterations") cfg.max_iterations = to_int(key, value);
    else if (key == "j_stall") cfg.j_stall = to_int(key, value);
    else if (key == "delta_stall") cfg.delta_stall = to_double(key, value);
    else if (key == "success_tol") cfg.success_tol = to_double(key, value);
    else if (key == "init") cfg.init = parse_init(value);
    else if (key == "seed") cfg.seed = to_u64(key, value);
    else if (key == "trace_every") cfg.trace_every = to_int(key, value);
    else if (key == "stall_reset") cfg.stall_reset = to_bool(key, value);
    else bad("unknown key '" + key + "'");
}

ParsedConfig parse_config_text(const std::string& text)
{
    ParsedConfig out;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') bad("line " + std::to_string(lineno) + ": malformed section");
            section = trim(line.substr(1, line.size() - 2));
            if (section != "dynamics" && section != "transition" && section != "experiment" &&
                section != "sweep")
                bad("line " + std::to_string(lineno) + ": unknown section [" + section + "]");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            bad("line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (section.empty()) bad("line " + std::to_string(lineno) + ": key outside a section");

        if (section == "sweep") {
            if (config_key_section(key).empty() || key == "runs")
                bad("line " + std::to_string(lineno) + ": cannot sweep key '" + key + "'");
            SweepAxis axis{key, {}};
            std::istringstream vs(value);
            std::string item;
            while (std::getline(vs, item, ',')) {
                item = trim(item);
                if (!item.empty()) axis.values.push_back(item);
            }
            if (axis.values.empty())
                bad("line " + std::to_string(lineno) + ": empty sweep axis '" + key + "'");
            out.axes.push_back(std::move(axis));
            continue;
        }

        const std::string expected = config_key_section(key);
        if (expected.empty()) bad("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        if (expected != section)
            bad("line " + std::to_string(lineno) + ": key '" + key + "' belongs to [" + expected +
                "], found in [" + section + "]");
        if (key == "runs") {
            out.runs = to_int(key, value);
            if (out.runs < 1) bad("runs must be >= 1");
        } else {
            set_config_key(out.base, key, value);
        }
    }
    return out;
}

ParsedConfig parse_config_file(const std::string& path)
{
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("config: cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_config_text(ss.str());
}

std::string to_string(Method m)
{
    switch (m) {
    case Method::GKBO: return "gkbo";
    case Method::KBO: return "kbo";
    case Method::GA: return "ga";
    case Method::GAModified: return "ga_modified";
    }
    return "?";
}

std::string to_string(Diffusion d)
{
    return d == Diffusion::Isotropic ? "isotropic" : "anisotropic";
}

std::string to_string(ConsensusSelector s)
{
    switch (s) {
    case ConsensusSelector::All: return "all";
    case ConsensusSelector::FollowersOnly: return "followers";
    case ConsensusSelector::LeadersOnly: return "leaders";
    }
    return "?";
}

std::string to_string(TransitionPolicy::Kind k)
{
    switch (k) {
    case TransitionPolicy::Kind::Random: return "random";
    case TransitionPolicy::Kind::Weighted: return "weighted";
    case TransitionPolicy::Kind::Mixed: return "mixed";
    }
    return "?";
}

std::string to_string(RunConfig::Init i)
{
    return i == RunConfig::Init::UniformBox ? "uniform_box" : "gaussian_box";
}

std::vector<ExperimentReport> sweep(const RunConfig& base, const std::vector<SweepAxis>& axes,
                                    int m_runs, std::uint64_t base_seed, int threads)
{
    if (axes.empty()) throw std::invalid_argument("sweep: no axes");
    for (const auto& a : axes)
        if (a.values.empty()) throw std::invalid_argument("sweep: empty axis '" + a.key + "'");

    std::size_t total = 1;
    for (const auto& a : axes) total *= a.values.size();

    std::vector<ExperimentReport> reports;
    reports.reserve(total);
    for (std::size_t g = 0; g < total; ++g) {
        RunConfig cfg = base;
        std::vector<std::pair<std::string, std::string>> point;
        std::size_t rem = g;
        // Last axis varies fastest.
        for (auto it = axes.rbegin(); it != axes.rend(); ++it) {
            const std::string& v = it->values[rem % it->values.size()];
            rem /= it->values.size();
            set_config_key(cfg, it->key, v);
            point.emplace_back(it->key, v);
        }
        std::reverse(point.begin(), point.end());
        try {
            ExperimentReport rep = run_experiment(cfg, m_runs, base_seed, threads, g);
            rep.grid_point = std::move(point);
            reports.push_back(std::move(rep));
        } catch (const std::exception& e) {
            std::clog << "sweep: grid point " << g << " failed: " << e.what() << "\n";
            ExperimentReport rep;
            rep.grid_index = g;
            rep.grid_point = std::move(point);
            rep.config = cfg;
            rep.n_runs = 0;
            reports.push_back(std::move(rep));
        }
    }
    return reports;
}

} // namespace gkbo
