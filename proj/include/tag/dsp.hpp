#pragma once

#include <cstddef>
#include <vector>

namespace tag::dsp {

// Mono audio at a fixed sample rate. The toolkit is resample-free: feature
// extraction accepts 16 kHz input only.
struct Waveform {
    std::vector<double> samples;
    int sample_rate_hz = 16000;
};

constexpr int kRequiredSampleRate = 16000;
constexpr double kFrameLengthS = 0.040;
constexpr double kFrameShiftS = 0.020;
constexpr std::size_t kNumMels = 64;
constexpr double kLogFloor = 1e-10;

// Row-major dense matrix, just enough for spectrogram plumbing.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> v;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), v(r * c, 0.0) {}
    double& at(std::size_t r, std::size_t c) { return v[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return v[r * cols + c]; }
};

// T x 64 log-mel feature matrix (natural log of mel energies).
struct MelSpectrogram {
    std::size_t num_frames = 0;
    std::vector<double> values;  // row-major, num_frames x kNumMels
    double frame_shift_s = kFrameShiftS;
    double frame_length_s = kFrameLengthS;

    double at(std::size_t t, std::size_t d) const { return values[t * kNumMels + d]; }
};

// Number of analysis frames: floor((n - win) / hop) + 1, zero if n < win.
std::size_t num_frames(std::size_t num_samples, std::size_t win, std::size_t hop);

std::size_t next_pow2(std::size_t n);

// Hann-windowed power spectrogram, T x (fft/2 + 1). fft size is the smallest
// power of two >= the window length in samples. No normalization: the k-th
// entry is |X_k|^2 of the zero-padded windowed frame.
Matrix stft_power(const Waveform& w, double win_s, double hop_s);

struct MelFilterbank {
    std::size_t n_mels = 0;
    std::size_t n_bins = 0;
    std::vector<double> weights;    // row-major, n_mels x n_bins
    std::vector<double> center_hz;  // strictly increasing, one per filter

    double at(std::size_t m, std::size_t k) const { return weights[m * n_bins + k]; }
};

// Triangular filters equally spaced on the HTK mel scale from 0 Hz to
// Nyquist. Throws "filterbank underresolved" if any filter ends up with no
// nonzero weight at the given fft resolution.
MelFilterbank mel_filterbank(int sample_rate_hz, std::size_t fft_size, std::size_t n_mels);

// 64-band log-mel spectrogram from a 40 ms window and 20 ms shift,
// log(mel . power + 1e-10). Requires 16 kHz input.
MelSpectrogram log_mel(const Waveform& w);

double hz_to_mel(double hz);
double mel_to_hz(double mel);

}  // namespace tag::dsp
