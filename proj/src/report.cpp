#include "laumon/report.hpp"

namespace laumon {

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Skipped:
      return "skipped-out-of-box";
  }
  return "fail";
}

Json to_json(const CheckRecord& r) {
  Json j;
  j["check"] = r.name;
  for (const auto& [k, v] : r.detail.items()) j[k] = v;
  j["status"] = status_name(r.status);
  if (!r.witness.is_null()) j["witness"] = r.witness;
  return j;
}

void Tally::add(const CheckRecord& r) {
  switch (r.status) {
    case Status::Pass:
      ++pass;
      break;
    case Status::Fail:
      ++fail;
      break;
    case Status::Skipped:
      ++skipped;
      break;
  }
}

void Tally::add(const std::vector<CheckRecord>& rs) {
  for (const auto& r : rs) add(r);
}

}  // namespace laumon
