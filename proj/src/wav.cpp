#include "tag/wav.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>

namespace tag::wav {

namespace {

uint16_t le16(const unsigned char* p) { return uint16_t(p[0] | (p[1] << 8)); }
uint32_t le32(const unsigned char* p) {
    return uint32_t(p[0]) | (uint32_t(p[1]) << 8) | (uint32_t(p[2]) << 16) | (uint32_t(p[3]) << 24);
}

void put16(std::string& out, uint16_t v) {
    out.push_back(char(v & 0xff));
    out.push_back(char((v >> 8) & 0xff));
}
void put32(std::string& out, uint32_t v) {
    out.push_back(char(v & 0xff));
    out.push_back(char((v >> 8) & 0xff));
    out.push_back(char((v >> 16) & 0xff));
    out.push_back(char((v >> 24) & 0xff));
}

struct ParsedWav {
    WavInfo info;
    std::streamoff data_pos = 0;
    uint32_t data_bytes = 0;
};

ParsedWav parse_header(std::ifstream& f, const std::string& name) {
    unsigned char hdr[12];
    if (!f.read(reinterpret_cast<char*>(hdr), 12))
        throw std::runtime_error(name + ": not a RIFF WAV file (truncated header)");
    if (std::memcmp(hdr, "RIFF", 4) != 0 || std::memcmp(hdr + 8, "WAVE", 4) != 0)
        throw std::runtime_error(name + ": not a RIFF WAV file");

    ParsedWav w;
    bool have_fmt = false;
    uint16_t format_tag = 0;
    uint16_t block_align = 0;
    while (true) {
        unsigned char ch[8];
        if (!f.read(reinterpret_cast<char*>(ch), 8)) break;
        uint32_t size = le32(ch + 4);
        if (std::memcmp(ch, "fmt ", 4) == 0) {
            if (size < 16) throw std::runtime_error(name + ": malformed fmt chunk");
            unsigned char fmt[16];
            if (!f.read(reinterpret_cast<char*>(fmt), 16))
                throw std::runtime_error(name + ": truncated fmt chunk");
            format_tag = le16(fmt + 0);
            w.info.channels = le16(fmt + 2);
            w.info.sample_rate_hz = le32(fmt + 4);
            block_align = le16(fmt + 12);
            w.info.bits_per_sample = le16(fmt + 14);
            if (size > 16) f.seekg(size - 16, std::ios::cur);
            have_fmt = true;
        } else if (std::memcmp(ch, "data", 4) == 0) {
            if (!have_fmt) throw std::runtime_error(name + ": data chunk before fmt chunk");
            w.data_pos = f.tellg();
            w.data_bytes = size;
            break;
        } else {
            f.seekg(size + (size & 1), std::ios::cur);
        }
        if (!f) throw std::runtime_error(name + ": truncated WAV chunks");
    }
    if (!have_fmt || w.data_pos == 0)
        throw std::runtime_error(name + ": missing fmt or data chunk");
    if (format_tag != 1)
        throw std::runtime_error(name + ": unsupported WAV encoding (format tag " +
                                 std::to_string(format_tag) + "), expected PCM");
    if (block_align == 0) block_align = uint16_t(w.info.channels * w.info.bits_per_sample / 8);
    if (block_align == 0) throw std::runtime_error(name + ": zero block align");
    w.info.num_frames = w.data_bytes / block_align;
    return w;
}

}  // namespace

WavInfo read_info(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open WAV file: " + path.string());
    return parse_header(f, path.filename().string()).info;
}

dsp::Waveform read_wav(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open WAV file: " + path.string());
    const std::string name = path.filename().string();
    ParsedWav w = parse_header(f, name);

    if (w.info.channels != 1)
        throw std::runtime_error(name + ": expected mono audio, got " +
                                 std::to_string(w.info.channels) + " channels");
    if (w.info.bits_per_sample != 16)
        throw std::runtime_error(name + ": expected 16-bit PCM, got " +
                                 std::to_string(w.info.bits_per_sample) + " bits");
    if (w.info.sample_rate_hz != dsp::kRequiredSampleRate)
        throw std::runtime_error(name + ": expected 16000 Hz, got " +
                                 std::to_string(w.info.sample_rate_hz) + " Hz");

    std::vector<char> raw(w.data_bytes);
    f.seekg(w.data_pos);
    if (!f.read(raw.data(), std::streamsize(w.data_bytes)))
        throw std::runtime_error(name + ": truncated data chunk");

    dsp::Waveform out;
    out.sample_rate_hz = int(w.info.sample_rate_hz);
    out.samples.resize(w.info.num_frames);
    for (size_t i = 0; i < out.samples.size(); ++i) {
        int16_t s = int16_t(le16(reinterpret_cast<const unsigned char*>(raw.data()) + 2 * i));
        out.samples[i] = double(s) / 32768.0;
    }
    return out;
}

void write_wav(const std::filesystem::path& path, std::span<const double> samples,
               int sample_rate_hz) {
    const uint32_t n = uint32_t(samples.size());
    const uint32_t data_bytes = n * 2;
    std::string buf;
    buf.reserve(44 + data_bytes);
    buf.append("RIFF");
    put32(buf, 36 + data_bytes);
    buf.append("WAVE");
    buf.append("fmt ");
    put32(buf, 16);
    put16(buf, 1);  // PCM
    put16(buf, 1);  // mono
    put32(buf, uint32_t(sample_rate_hz));
    put32(buf, uint32_t(sample_rate_hz) * 2);
    put16(buf, 2);   // block align
    put16(buf, 16);  // bits
    buf.append("data");
    put32(buf, data_bytes);
    for (double s : samples) {
        double c = std::clamp(s, -1.0, 1.0);
        int v = int(std::lround(c * 32767.0));
        put16(buf, uint16_t(int16_t(v)));
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open for writing: " + path.string());
    f.write(buf.data(), std::streamsize(buf.size()));
    if (!f) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace tag::wav
