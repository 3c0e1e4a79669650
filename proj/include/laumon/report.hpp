#pragma once

// Check records shared by every verification suite.

#include <string>
#include <vector>

#include "laumon/json_io.hpp"

namespace laumon {

enum class Status { Pass, Fail, Skipped };

const char* status_name(Status s);

struct CheckRecord {
  std::string name;
  Status status = Status::Pass;
  /// Parameters of the check (n, degree, indices, ...), in insertion order.
  Json detail = Json::object();
  /// The offending value on failure, null otherwise.
  Json witness = nullptr;
};

Json to_json(const CheckRecord& r);

struct Tally {
  int pass = 0;
  int fail = 0;
  int skipped = 0;
  void add(const CheckRecord& r);
  void add(const std::vector<CheckRecord>& rs);
  bool ok() const { return fail == 0; }
};

}  // namespace laumon
