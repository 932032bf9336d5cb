#pragma once

#include <cstdint>
#include <string>

#include "ordinary/geometry.hpp"

namespace ordinary {

// xorshift64* (Vigna's 64-bit shift-register generator with a multiplicative
// output scramble). Chosen for portability: the sequence is pinned by the
// three shifts and the multiplier, so seeded generation is reproducible
// across implementations. A zero seed maps to a fixed odd constant.
struct Xorshift64Star {
    std::uint64_t state;
    explicit Xorshift64Star(std::uint64_t seed) : state(seed ? seed : 0x9E3779B97F4A7C15ull) {}
    std::uint64_t next() {
        state ^= state >> 12;
        state ^= state << 25;
        state ^= state >> 27;
        return state * 0x2545F4914F6CDD1Dull;
    }
    // Uniform-ish draw via modulo; the slight bias is irrelevant here, the
    // exact formula is what matters for reproducibility.
    long pick(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

enum class GenKind { Random, HeavyLine, HeavyConic, OnCubic, Grid, Case3b, Case3c };

GenKind gen_kind_from_name(const std::string& name);
const char* gen_kind_name(GenKind k);

struct GeneratorSpec {
    GenKind kind = GenKind::Random;
    int n = 0;
    std::uint64_t seed = 0;
    long bound = 1000;
    int on_count = 0; // heavy-line/heavy-conic structured count; 0 picks the default
};

// Deterministic point sets per kind; each kind's structural promise is
// re-verified before returning (a failed promise deterministically re-salts
// the seed). Same spec, byte-identical output.
PointSet generate(const GeneratorSpec& spec);

} // namespace ordinary
