#include "d2lab/report.hpp"

namespace d2lab {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

std::string_view to_string(CheckKind k) {
  switch (k) {
    case CheckKind::property: return "property";
    case CheckKind::verdict: return "verdict";
    case CheckKind::info: return "info";
  }
  return "?";
}

CheckRecord& Report::add(CheckRecord rec) {
  records_.push_back(std::move(rec));
  return records_.back();
}

CheckRecord& Report::property(std::string id, bool ok, std::string witness) {
  CheckRecord r;
  r.id = std::move(id);
  r.status = ok ? Status::pass : Status::fail;
  if (!ok) r.witness = std::move(witness);
  return add(std::move(r));
}

CheckRecord& Report::verdict(std::string id, bool yes, std::string witness) {
  CheckRecord r;
  r.id = std::move(id);
  r.kind = CheckKind::verdict;
  r.status = yes ? Status::pass : Status::fail;
  r.witness = std::move(witness);
  return add(std::move(r));
}

CheckRecord& Report::info(std::string id, bool yes, std::string note) {
  CheckRecord r;
  r.id = std::move(id);
  r.kind = CheckKind::info;
  r.status = yes ? Status::pass : Status::fail;
  r.note = std::move(note);
  return add(std::move(r));
}

CheckRecord& Report::skip(std::string id, std::string note, CheckKind kind) {
  CheckRecord r;
  r.id = std::move(id);
  r.kind = kind;
  r.status = Status::skipped;
  r.note = std::move(note);
  return add(std::move(r));
}

void Report::append(const Report& other) {
  records_.insert(records_.end(), other.records_.begin(), other.records_.end());
}

const CheckRecord* Report::find(std::string_view id) const {
  for (const auto& r : records_)
    if (r.id == id) return &r;
  return nullptr;
}

bool Report::passed(std::string_view id) const {
  const CheckRecord* r = find(id);
  return r != nullptr && r->status == Status::pass;
}

bool Report::consistent() const { return failures().empty(); }

std::vector<std::string> Report::failures() const {
  std::vector<std::string> out;
  for (const auto& r : records_)
    if (r.kind == CheckKind::property && r.status == Status::fail) out.push_back(r.id);
  return out;
}

}  // namespace d2lab
