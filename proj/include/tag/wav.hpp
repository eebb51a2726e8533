#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "tag/dsp.hpp"

namespace tag::wav {

struct WavInfo {
    uint32_t sample_rate_hz = 0;
    uint16_t channels = 0;
    uint16_t bits_per_sample = 0;
    uint64_t num_frames = 0;
};

// Header-only probe; throws on malformed RIFF/fmt chunks.
WavInfo read_info(const std::filesystem::path& path);

// Reads a RIFF WAV file. Only PCM 16-bit little-endian, mono, 16 kHz is
// accepted; anything else throws with a message naming the offending field.
// Samples are scaled to [-1, 1) by 1/32768.
dsp::Waveform read_wav(const std::filesystem::path& path);

// Writes mono 16 kHz PCM16. Samples are clamped to [-1, 1] and rounded.
// Output bytes are a pure function of the input samples.
void write_wav(const std::filesystem::path& path, std::span<const double> samples,
               int sample_rate_hz = 16000);

}  // namespace tag::wav
