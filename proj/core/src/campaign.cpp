#include "commlip/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <complex>
#include <random>
#include <thread>

#include "commlip/core_approx.hpp"
#include "commlip/errors.hpp"

namespace commlip {

namespace {

constexpr std::uint64_t kShards = 64;
constexpr std::size_t kHistogramBins = 24;
constexpr double kHistogramWidth = 0.05;

struct ShardResult {
    std::uint64_t evaluated = 0;
    std::uint64_t skipped = 0;
    double max_ratio = 0.0;
    bool has_max = false;
    CampaignInstance argmax;
    std::vector<std::uint64_t> histogram = std::vector<std::uint64_t>(kHistogramBins, 0);
};

double parse_param(const std::string& text, const std::string& full)
{
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw BadParameter("cannot parse function '" + full + "'");
    }
    return v;
}

CMatrix gaussian_matrix(int n, std::mt19937_64& rng)
{
    std::normal_distribution<double> normal(0.0, 1.0);
    CMatrix M(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) M(i, j) = {normal(rng), normal(rng)};
    }
    return M;
}

CMatrix wishart(int n, std::mt19937_64& rng)
{
    const CMatrix M = gaussian_matrix(n, rng);
    CMatrix A = M.adjoint() * M / static_cast<double>(n);
    return 0.5 * (A + A.adjoint());
}

CMatrix sample_psd(int n, const CampaignConfig& cfg, std::mt19937_64& rng)
{
    CMatrix A = wishart(n, rng);
    if (cfg.normalize_a) {
        const double top = ui_norm(A, NormKind::operator_norm());
        if (top > 0.0) A /= top;
    } else {
        std::uniform_real_distribution<double> expo(-2.0, 2.0);
        A *= std::pow(10.0, expo(rng));
    }
    return A;
}

ShardResult run_shard(const CampaignConfig& cfg, const ScalarFn& f, std::uint64_t shard,
                      std::uint64_t count)
{
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(shard)};
    std::mt19937_64 rng(seq);
    // Ky Fan(k) needs at least k rows.
    const int n_min = cfg.norm.tag == NormKind::Tag::ky_fan ? cfg.norm.k : 1;
    std::uniform_int_distribution<int> dim(n_min, cfg.n_max);

    ShardResult out;
    for (std::uint64_t t = 0; t < count; ++t) {
        const int n = dim(rng);
        CampaignInstance inst;
        inst.A = sample_psd(n, cfg, rng);
        inst.B = cfg.same_ab ? inst.A : sample_psd(n, cfg, rng);
        inst.X = gaussian_matrix(n, rng);
        const double nx = ui_norm(inst.X, cfg.norm);
        if (nx == 0.0) {
            ++out.skipped;
            continue;
        }
        inst.X /= nx;

        if (cfg.min_commutator > 0.0 &&
            ui_norm(gen_commutator(inst.A, inst.X, inst.B), cfg.norm) < cfg.min_commutator) {
            ++out.skipped;
            continue;
        }
        double ratio = 0.0;
        try {
            ratio = verify_conjecture_ratio(inst.A, inst.B, inst.X, f, cfg.norm);
        } catch (const ZeroDenominator&) {
            ++out.skipped;
            continue;
        }
        if (ratio == 0.0) {
            ++out.skipped;
            continue;
        }
        ++out.evaluated;
        const auto bin = std::min<std::size_t>(static_cast<std::size_t>(ratio / kHistogramWidth),
                                               kHistogramBins - 1);
        ++out.histogram[bin];
        if (!out.has_max || ratio > out.max_ratio) {
            out.max_ratio = ratio;
            out.argmax = inst;
            out.has_max = true;
        }
    }
    return out;
}

} // namespace

void CampaignConfig::validate() const
{
    if (n_max < 1) throw BadParameter("campaign: n_max must be >= 1");
    if (trials < 1) throw BadParameter("campaign: trials must be >= 1");
    if (!(min_commutator >= 0.0)) throw BadParameter("campaign: min_commutator must be >= 0");
    if (norm.tag == NormKind::Tag::ky_fan && (norm.k < 1 || norm.k > n_max)) {
        throw BadParameter("campaign: Ky Fan order must lie in 1..n_max");
    }
    campaign_function(f_name);
}

ScalarFn campaign_function(const std::string& name)
{
    if (name == "f1") return [](double x) { return f1(x); };
    if (name == "sqrt") return [](double x) { return std::sqrt(x); };
    const auto colon = name.find(':');
    if (colon != std::string::npos) {
        const std::string head = name.substr(0, colon);
        const double v = parse_param(name.substr(colon + 1), name);
        if (head == "pow") {
            if (!(v > 0.0 && v <= 1.0)) throw BadParameter("pow exponent must lie in (0, 1]");
            return [v](double x) { return std::pow(x, v); };
        }
        if (head == "ft") {
            if (!(v > 0.0)) throw BadParameter("ft parameter must be positive");
            return [v](double x) { return std::sqrt(x + v) - std::sqrt(v); };
        }
    }
    throw BadParameter("unknown function '" + name + "'");
}

CampaignReport monte_carlo_campaign(const CampaignConfig& cfg)
{
    cfg.validate();
    const ScalarFn f = campaign_function(cfg.f_name);

    const std::uint64_t shards = std::min(kShards, cfg.trials);
    std::vector<ShardResult> results(shards);
    const auto count_for = [&](std::uint64_t s) {
        return cfg.trials / shards + (s < cfg.trials % shards ? 1 : 0);
    };

    const unsigned workers = std::max(1u, std::min<unsigned>(cfg.threads, static_cast<unsigned>(shards)));
    if (workers == 1) {
        for (std::uint64_t s = 0; s < shards; ++s) results[s] = run_shard(cfg, f, s, count_for(s));
    } else {
        std::atomic<std::uint64_t> next{0};
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&]() {
                for (std::uint64_t s = next++; s < shards; s = next++) {
                    results[s] = run_shard(cfg, f, s, count_for(s));
                }
            });
        }
    }

    CampaignReport rep;
    rep.config = cfg;
    rep.histogram_width = kHistogramWidth;
    rep.histogram.assign(kHistogramBins, 0);
    bool has_max = false;
    for (const auto& r : results) {
        rep.evaluated += r.evaluated;
        rep.skipped += r.skipped;
        for (std::size_t b = 0; b < kHistogramBins; ++b) rep.histogram[b] += r.histogram[b];
        if (r.has_max && (!has_max || r.max_ratio > rep.max_ratio)) {
            rep.max_ratio = r.max_ratio;
            rep.argmax = r.argmax;
            has_max = true;
        }
    }
    return rep;
}

} // namespace commlip
