#pragma once

#include <iosfwd>
#include <optional>
#include <string_view>

#include "fpppart/partitioner.hpp"

namespace fpp {

// tsv: one "u<TAB>v<TAB>pid" line per edge.
// bin: three 64-bit little-endian unsigned values per record.
enum class AssignmentFormat { Tsv, Bin };

std::optional<AssignmentFormat> assignment_format_from_name(std::string_view name);

class AssignmentWriter {
 public:
  AssignmentWriter(std::ostream& out, AssignmentFormat format);
  void write(const EdgeAssignment& a);

 private:
  std::ostream& out_;
  AssignmentFormat format_;
};

class AssignmentReader {
 public:
  AssignmentReader(std::istream& in, AssignmentFormat format);
  // DataError on a malformed record.
  std::optional<EdgeAssignment> next();

 private:
  std::istream& in_;
  AssignmentFormat format_;
  uint64_t record_ = 0;
};

}  // namespace fpp
