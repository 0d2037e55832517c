#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace d2lab {

enum class Status { pass, fail, skipped };

/// property: a fact the theory guarantees; a failure is an inconsistency.
/// verdict: a decision (D2 or not, balanced or not); "fail" is a negative answer.
/// info: exploratory output that never affects the exit status.
enum class CheckKind { property, verdict, info };

std::string_view to_string(Status s);
std::string_view to_string(CheckKind k);

struct CheckRecord {
  std::string id;
  Status status = Status::pass;
  CheckKind kind = CheckKind::property;
  std::string witness;
  std::string note;
  std::vector<std::pair<std::string, std::size_t>> dims;
};

class Report {
 public:
  CheckRecord& add(CheckRecord rec);
  CheckRecord& property(std::string id, bool ok, std::string witness = {});
  CheckRecord& verdict(std::string id, bool yes, std::string witness = {});
  CheckRecord& info(std::string id, bool yes, std::string note = {});
  CheckRecord& skip(std::string id, std::string note, CheckKind kind = CheckKind::property);
  void append(const Report& other);

  const std::vector<CheckRecord>& records() const noexcept { return records_; }
  const CheckRecord* find(std::string_view id) const;
  /// True iff the record exists and passed.
  bool passed(std::string_view id) const;
  /// True iff no property check failed.
  bool consistent() const;
  /// Ids of failed property checks.
  std::vector<std::string> failures() const;

 private:
  std::vector<CheckRecord> records_;
};

}  // namespace d2lab
