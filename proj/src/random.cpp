#include "sae/random.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace sae {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
constexpr double kPi = 3.141592653589793238462643383279502884;

std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += kGolden);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t mix64(std::uint64_t z) {
    z += kGolden;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed, std::int64_t label_a, std::int64_t label_b) {
    // Absorb the key into one 64-bit word, then expand with splitmix64 (the
    // recommended seeding procedure for the xoshiro family). The label
    // components get distinct odd multipliers so (a, b) and (b, a) differ.
    std::uint64_t h = mix64(seed);
    h = mix64(h ^ (static_cast<std::uint64_t>(label_a) * 0xD6E8FEB86659FD93ULL));
    h = mix64(h ^ (static_cast<std::uint64_t>(label_b) * 0xCA5A826395121157ULL));
    for (auto& s : state_) s = splitmix64_next(h);
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
}

std::uint64_t RandomStream::next_u64() {
    // xoshiro256++
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double RandomStream::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t RandomStream::uniform_int(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_int: bound must be positive");
    // Lemire's multiply-shift with rejection of the biased low range.
    std::uint64_t x = next_u64();
    __uint128_t m = static_cast<__uint128_t>(x) * bound;
    std::uint64_t low = static_cast<std::uint64_t>(m);
    if (low < bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            x = next_u64();
            m = static_cast<__uint128_t>(x) * bound;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

double RandomStream::normal(double mu, double sigma) {
    if (!std::isfinite(mu) || !std::isfinite(sigma) || sigma < 0.0)
        throw std::invalid_argument("normal: invalid parameters");
    if (sigma == 0.0) return mu;
    if (has_cached_normal_) {
        has_cached_normal_ = false;
        return mu + sigma * cached_normal_;
    }
    // Box-Muller; 1-u keeps the log argument in (0, 1].
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log1p(-u1));
    const double angle = 2.0 * kPi * u2;
    cached_normal_ = r * std::sin(angle);
    has_cached_normal_ = true;
    return mu + sigma * r * std::cos(angle);
}

double RandomStream::gamma(double shape, double scale) {
    if (!(shape > 0.0) || !(scale > 0.0) || !std::isfinite(shape) || !std::isfinite(scale))
        throw std::invalid_argument("gamma: shape and scale must be positive");
    if (shape < 1.0) {
        // Boost the shape, then correct with a power of a uniform.
        const double u = 1.0 - uniform();
        return gamma(shape + 1.0, scale) * std::pow(u, 1.0 / shape);
    }
    // Marsaglia-Tsang squeeze method.
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x;
        double v;
        do {
            x = normal(0.0, 1.0);
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = 1.0 - uniform();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return d * v * scale;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v * scale;
    }
}

double RandomStream::lognormal(double log_mu, double log_sigma) {
    if (!std::isfinite(log_mu) || !std::isfinite(log_sigma) || log_sigma < 0.0)
        throw std::invalid_argument("lognormal: invalid parameters");
    return std::exp(normal(log_mu, log_sigma));
}

RandomStream derive_stream(std::uint64_t seed, std::int64_t label_a, std::int64_t label_b) {
    return RandomStream(seed, label_a, label_b);
}

std::vector<std::int64_t> srswor(RandomStream& stream, std::int64_t N, std::int64_t n) {
    if (n < 1 || N < 1 || n > N)
        throw std::invalid_argument("srswor: need 1 <= n <= N");
    std::unordered_set<std::int64_t> chosen;
    chosen.reserve(static_cast<std::size_t>(2 * n));
    for (std::int64_t j = N - n; j < N; ++j) {
        const auto t = static_cast<std::int64_t>(
            stream.uniform_int(static_cast<std::uint64_t>(j) + 1));
        chosen.insert(chosen.count(t) != 0 ? j : t);
    }
    std::vector<std::int64_t> out(chosen.begin(), chosen.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace sae
