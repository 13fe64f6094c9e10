#include "fpppart/assignment_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <string>

#include "fpppart/errors.hpp"

namespace fpp {
namespace {

void put_u64_le(char* out, uint64_t x) {
  for (int i = 0; i < 8; ++i) out[i] = static_cast<char>((x >> (8 * i)) & 0xff);
}

uint64_t get_u64_le(const char* in) {
  uint64_t x = 0;
  for (int i = 0; i < 8; ++i) x |= static_cast<uint64_t>(static_cast<uint8_t>(in[i])) << (8 * i);
  return x;
}

}  // namespace

std::optional<AssignmentFormat> assignment_format_from_name(std::string_view name) {
  if (name == "tsv") return AssignmentFormat::Tsv;
  if (name == "bin") return AssignmentFormat::Bin;
  return std::nullopt;
}

AssignmentWriter::AssignmentWriter(std::ostream& out, AssignmentFormat format)
    : out_(out), format_(format) {}

void AssignmentWriter::write(const EdgeAssignment& a) {
  if (format_ == AssignmentFormat::Bin) {
    char rec[24];
    put_u64_le(rec, a.u);
    put_u64_le(rec + 8, a.v);
    put_u64_le(rec + 16, a.pid);
    out_.write(rec, sizeof rec);
    return;
  }
  char buf[64];
  char* p = buf;
  auto emit = [&p](uint64_t x, char sep) {
    p = std::to_chars(p, p + 20, x).ptr;
    *p++ = sep;
  };
  emit(a.u, '\t');
  emit(a.v, '\t');
  emit(a.pid, '\n');
  out_.write(buf, p - buf);
}

AssignmentReader::AssignmentReader(std::istream& in, AssignmentFormat format)
    : in_(in), format_(format) {}

std::optional<EdgeAssignment> AssignmentReader::next() {
  ++record_;
  if (format_ == AssignmentFormat::Bin) {
    char rec[24];
    in_.read(rec, sizeof rec);
    if (in_.gcount() == 0 && in_.eof()) return std::nullopt;
    if (in_.gcount() != sizeof rec) {
      throw DataError("truncated binary assignment record " + std::to_string(record_));
    }
    EdgeAssignment a;
    a.u = get_u64_le(rec);
    a.v = get_u64_le(rec + 8);
    const uint64_t pid = get_u64_le(rec + 16);
    if (pid > 0xffffffffull) {
      throw DataError("partition id overflow in record " + std::to_string(record_));
    }
    a.pid = static_cast<uint32_t>(pid);
    return a;
  }

  std::string line;
  while (std::getline(in_, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const char* p = line.data();
    const char* end = p + line.size();
    EdgeAssignment a;
    uint64_t pid = 0;
    auto take = [&](uint64_t& out) {
      auto r = std::from_chars(p, end, out);
      if (r.ec != std::errc{}) return false;
      p = r.ptr;
      while (p != end && (*p == '\t' || *p == ' ')) ++p;
      return true;
    };
    if (!take(a.u) || !take(a.v) || !take(pid) || p != end || pid > 0xffffffffull) {
      throw DataError("malformed assignment record " + std::to_string(record_));
    }
    a.pid = static_cast<uint32_t>(pid);
    return a;
  }
  return std::nullopt;
}

}  // namespace fpp
