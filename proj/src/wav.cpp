// Copyright 2026 The geopse authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "geopse/wav.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

namespace geopse {
namespace {

constexpr uint16_t kFmtPcm = 1;
constexpr uint16_t kFmtFloat = 3;
constexpr uint16_t kFmtExtensible = 0xFFFE;

uint32_t ReadU32(const uint8_t* p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) |
         (static_cast<uint32_t>(p[3]) << 24);
}

uint16_t ReadU16(const uint8_t* p) {
  return static_cast<uint16_t>(p[0] | (p[1] << 8));
}

void PutU32(std::vector<uint8_t>& out, uint32_t v) {
  out.push_back(v & 0xFF);
  out.push_back((v >> 8) & 0xFF);
  out.push_back((v >> 16) & 0xFF);
  out.push_back((v >> 24) & 0xFF);
}

void PutU16(std::vector<uint8_t>& out, uint16_t v) {
  out.push_back(v & 0xFF);
  out.push_back((v >> 8) & 0xFF);
}

}  // namespace

WavData ReadWav(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  Require(f.good(), kIoError, "cannot open WAV file: " + path);
  std::vector<uint8_t> raw((std::istreambuf_iterator<char>(f)),
                           std::istreambuf_iterator<char>());
  Require(raw.size() >= 44, kBadWav, "WAV too short: " + path);
  Require(std::memcmp(raw.data(), "RIFF", 4) == 0 &&
              std::memcmp(raw.data() + 8, "WAVE", 4) == 0,
          kBadWav, "not a RIFF/WAVE file: " + path);

  uint16_t format = 0, channels = 0, bits = 0;
  uint32_t rate = 0;
  const uint8_t* data = nullptr;
  size_t data_len = 0;

  size_t pos = 12;
  while (pos + 8 <= raw.size()) {
    const uint8_t* hdr = raw.data() + pos;
    uint32_t chunk_len = ReadU32(hdr + 4);
    size_t body = pos + 8;
    if (body + chunk_len > raw.size()) chunk_len = raw.size() - body;
    if (std::memcmp(hdr, "fmt ", 4) == 0) {
      Require(chunk_len >= 16, kBadWav, "malformed fmt chunk: " + path);
      format = ReadU16(raw.data() + body);
      channels = ReadU16(raw.data() + body + 2);
      rate = ReadU32(raw.data() + body + 4);
      bits = ReadU16(raw.data() + body + 14);
      if (format == kFmtExtensible && chunk_len >= 40) {
        format = ReadU16(raw.data() + body + 24);
      }
    } else if (std::memcmp(hdr, "data", 4) == 0) {
      data = raw.data() + body;
      data_len = chunk_len;
    }
    pos = body + chunk_len + (chunk_len & 1);
  }

  Require(channels >= 1, kBadWav, "WAV has no channels: " + path);
  Require(data != nullptr, kBadWav, "WAV has no data chunk: " + path);
  const bool s16 = (format == kFmtPcm && bits == 16);
  const bool f32 = (format == kFmtFloat && bits == 32);
  Require(s16 || f32, kBadWav,
          "unsupported WAV encoding (want s16 PCM or f32 float): " + path);

  const size_t bytes_per = bits / 8;
  const size_t frames = data_len / (bytes_per * channels);
  WavData out;
  out.sample_rate = static_cast<int>(rate);
  out.samples.resize(static_cast<Eigen::Index>(frames), channels);
  if (s16) {
    for (size_t i = 0; i < frames; ++i) {
      for (int c = 0; c < channels; ++c) {
        const uint8_t* p = data + (i * channels + c) * 2;
        int16_t v = static_cast<int16_t>(p[0] | (p[1] << 8));
        out.samples(static_cast<Eigen::Index>(i), c) = v / 32768.0f;
      }
    }
  } else {
    for (size_t i = 0; i < frames; ++i) {
      for (int c = 0; c < channels; ++c) {
        float v;
        std::memcpy(&v, data + (i * channels + c) * 4, 4);
        out.samples(static_cast<Eigen::Index>(i), c) = v;
      }
    }
  }
  return out;
}

WavData ReadWav16k(const std::string& path) {
  WavData w = ReadWav(path);
  Require(w.sample_rate == kSampleRate, kBadWav,
          "unsupported sample rate " + std::to_string(w.sample_rate) +
              " Hz (need 16000): " + path);
  return w;
}

void WriteWav(const std::string& path, const Wave& samples, int sample_rate,
              WavFormat format) {
  const int channels = static_cast<int>(samples.cols());
  const int64_t frames = samples.rows();
  Require(channels >= 1, kInternal, "WriteWav: no channels");
  const int bytes_per = format == WavFormat::kS16 ? 2 : 4;
  const uint32_t data_len =
      static_cast<uint32_t>(frames * channels * bytes_per);

  std::vector<uint8_t> out;
  out.reserve(44 + data_len);
  out.insert(out.end(), {'R', 'I', 'F', 'F'});
  PutU32(out, 36 + data_len);
  out.insert(out.end(), {'W', 'A', 'V', 'E', 'f', 'm', 't', ' '});
  PutU32(out, 16);
  PutU16(out, format == WavFormat::kS16 ? kFmtPcm : kFmtFloat);
  PutU16(out, static_cast<uint16_t>(channels));
  PutU32(out, static_cast<uint32_t>(sample_rate));
  PutU32(out, static_cast<uint32_t>(sample_rate * channels * bytes_per));
  PutU16(out, static_cast<uint16_t>(channels * bytes_per));
  PutU16(out, static_cast<uint16_t>(bytes_per * 8));
  out.insert(out.end(), {'d', 'a', 't', 'a'});
  PutU32(out, data_len);

  for (int64_t i = 0; i < frames; ++i) {
    for (int c = 0; c < channels; ++c) {
      float v = samples(i, c);
      if (format == WavFormat::kS16) {
        float scaled = v * 32768.0f;
        if (scaled > 32767.0f) scaled = 32767.0f;
        if (scaled < -32768.0f) scaled = -32768.0f;
        int16_t q = static_cast<int16_t>(std::lrintf(scaled));
        out.push_back(static_cast<uint16_t>(q) & 0xFF);
        out.push_back((static_cast<uint16_t>(q) >> 8) & 0xFF);
      } else {
        uint8_t b[4];
        std::memcpy(b, &v, 4);
        out.insert(out.end(), b, b + 4);
      }
    }
  }

  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  Require(f.good(), kIoError, "cannot write WAV file: " + path);
  f.write(reinterpret_cast<const char*>(out.data()),
          static_cast<std::streamsize>(out.size()));
  Require(f.good(), kIoError, "short write: " + path);
}

}  // namespace geopse
