#include "gsp/archive.hpp"

#include <zlib.h>

#include <cstring>

#include "gsp/errors.hpp"

namespace gsp {

std::string gunzip(std::string_view gz) {
  z_stream stream{};
  // 15 window bits + 16 selects gzip framing
  if (inflateInit2(&stream, 15 + 16) != Z_OK) {
    throw FormatError("zlib initialization failed");
  }
  std::string out;
  stream.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(gz.data()));
  stream.avail_in = static_cast<uInt>(gz.size());
  char buffer[1 << 15];
  int rc = Z_OK;
  do {
    stream.next_out = reinterpret_cast<Bytef*>(buffer);
    stream.avail_out = sizeof buffer;
    rc = inflate(&stream, Z_NO_FLUSH);
    if (rc != Z_OK && rc != Z_STREAM_END) {
      inflateEnd(&stream);
      throw FormatError("corrupt gzip stream: " +
                        std::string(stream.msg ? stream.msg : zError(rc)));
    }
    out.append(buffer, sizeof buffer - stream.avail_out);
  } while (rc != Z_STREAM_END && (stream.avail_in > 0 || stream.avail_out == 0));
  inflateEnd(&stream);
  if (rc != Z_STREAM_END) {
    throw FormatError("truncated gzip stream");
  }
  return out;
}

namespace {

constexpr size_t kBlock = 512;

size_t parse_octal(const char* field, size_t width) {
  size_t value = 0;
  for (size_t i = 0; i < width; ++i) {
    const char c = field[i];
    if (c == '\0' || c == ' ') break;
    if (c < '0' || c > '7') {
      throw FormatError("bad octal field in tar header");
    }
    value = value * 8 + static_cast<size_t>(c - '0');
  }
  return value;
}

bool zero_block(const char* block) {
  for (size_t i = 0; i < kBlock; ++i) {
    if (block[i] != '\0') return false;
  }
  return true;
}

}  // namespace

std::vector<TarEntry> untar(std::string_view tar) {
  std::vector<TarEntry> entries;
  size_t pos = 0;
  while (pos + kBlock <= tar.size()) {
    const char* header = tar.data() + pos;
    if (zero_block(header)) break;  // end-of-archive marker
    char name[101] = {0};
    std::memcpy(name, header, 100);
    const size_t size = parse_octal(header + 124, 12);
    const char type = header[156];
    char prefix[156] = {0};
    std::memcpy(prefix, header + 345, 155);

    pos += kBlock;
    const size_t padded = (size + kBlock - 1) / kBlock * kBlock;
    if (pos + size > tar.size()) {
      throw FormatError("truncated tar archive");
    }
    if (type == '0' || type == '\0') {
      std::string full = prefix[0] ? std::string(prefix) + "/" + name : name;
      entries.push_back({std::move(full), std::string(tar.substr(pos, size))});
    }
    // directories, pax/gnu extension records and link entries are skipped
    pos += padded;
  }
  return entries;
}

}  // namespace gsp
