#pragma once

#include <cstdint>
#include <vector>

namespace sae {

/// Deterministic random stream: a xoshiro256++ generator whose state is
/// derived from a (master seed, label pair) key via splitmix64 expansion.
/// Identical keys give bitwise-identical draw sequences on every platform;
/// distinct labels give statistically independent streams, so parallel
/// replicates can each own one without coordination.
class RandomStream {
public:
    RandomStream() : RandomStream(0, 0, 0) {}
    RandomStream(std::uint64_t seed, std::int64_t label_a, std::int64_t label_b);

    std::uint64_t next_u64();

    /// Uniform on [0, 1), 53-bit resolution.
    double uniform();

    /// Uniform integer on [0, bound), bias-free.
    std::uint64_t uniform_int(std::uint64_t bound);

    /// N(mu, sigma^2). sigma == 0 returns mu without consuming draws.
    double normal(double mu, double sigma);

    /// Gamma with the shape-scale parameterization: mean = shape * scale.
    double gamma(double shape, double scale);

    /// exp(N(log_mu, log_sigma^2)).
    double lognormal(double log_mu, double log_sigma);

private:
    std::uint64_t state_[4];
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

/// Stream for the given (seed, label) key.
RandomStream derive_stream(std::uint64_t seed, std::int64_t label_a, std::int64_t label_b);

/// Simple random sample without replacement: n distinct indices from [0, N),
/// every size-n subset equally likely (Floyd's algorithm). Sorted ascending.
std::vector<std::int64_t> srswor(RandomStream& stream, std::int64_t N, std::int64_t n);

}  // namespace sae
