// Copyright 2026 The FairConf Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "errors.hpp"

namespace fairconf {

using nlohmann::json;

InstanceFormat ParseInstanceFormat(const std::string& name) {
  if (name == "json") return InstanceFormat::kJson;
  if (name == "csv-triplet" || name == "csv") return InstanceFormat::kCsvTriplet;
  Fail(ErrorCode::kInvalidArgument, "unknown instance format '" + name + "'");
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorCode::kIoError, "cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteTextFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) Fail(ErrorCode::kIoError, "cannot open '" + path + "' for writing");
  out << content;
  if (!out) Fail(ErrorCode::kIoError, "failed writing '" + path + "'");
}

namespace {

json ParseJsonText(const std::string& text) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) Fail(ErrorCode::kParseError, "malformed JSON");
  return doc;
}

double NumberField(const json& value, const char* what) {
  if (!value.is_number()) Fail(ErrorCode::kParseError, std::string(what) + " must be a number");
  return value.get<double>();
}

Matrix MatrixFromJson(const json& rows, std::size_t expect_rows, std::size_t expect_cols,
                      const char* name) {
  if (!rows.is_array() || rows.size() != expect_rows) {
    std::ostringstream msg;
    msg << name << " has " << (rows.is_array() ? rows.size() : 0) << " rows, expected "
        << expect_rows;
    Fail(ErrorCode::kDimensionMismatch, msg.str());
  }
  Matrix out(expect_rows, expect_cols);
  for (std::size_t r = 0; r < expect_rows; ++r) {
    const json& row = rows[r];
    if (!row.is_array() || row.size() != expect_cols) {
      std::ostringstream msg;
      msg << name << " row " << r << " has " << (row.is_array() ? row.size() : 0)
          << " columns, expected " << expect_cols;
      Fail(ErrorCode::kDimensionMismatch, msg.str());
    }
    for (std::size_t c = 0; c < expect_cols; ++c)
      out(r, c) = NumberField(row[c], name);
  }
  return out;
}

json MatrixToJson(const Matrix& matrix) {
  json rows = json::array();
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < matrix.cols(); ++c) row.push_back(matrix(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string InstanceToJson(const SchedulingInstance& instance) {
  json doc;
  doc["participants"] = json::array();
  for (const auto& p : instance.participants) doc["participants"].push_back({{"id", p}});
  doc["talks"] = json::array();
  for (const auto& t : instance.talks) {
    json talk = {{"id", t.id}};
    if (t.priority) talk["priority"] = *t.priority;
    doc["talks"].push_back(std::move(talk));
  }
  doc["slots"] = json::array();
  for (const auto& s : instance.slots)
    doc["slots"].push_back({{"id", s.id},
                            {"start_utc_min", s.start_utc_min},
                            {"duration_min", s.duration_min}});
  doc["interest"] = MatrixToJson(instance.interest);
  doc["availability"] = MatrixToJson(instance.availability);
  if (!instance.weights.empty()) doc["weights"] = instance.weights;
  return doc.dump(2) + "\n";
}

SchedulingInstance InstanceFromJson(const std::string& text) {
  json doc = ParseJsonText(text);
  if (!doc.is_object()) Fail(ErrorCode::kParseError, "instance JSON must be an object");
  for (const char* key : {"participants", "talks", "slots", "interest", "availability"})
    if (!doc.contains(key))
      Fail(ErrorCode::kParseError, std::string("instance JSON misses '") + key + "'");

  SchedulingInstance instance;
  for (const json& p : doc["participants"]) {
    if (!p.contains("id") || !p["id"].is_string())
      Fail(ErrorCode::kParseError, "participant entries need a string 'id'");
    instance.participants.push_back(p["id"].get<std::string>());
  }
  for (const json& t : doc["talks"]) {
    if (!t.contains("id") || !t["id"].is_string())
      Fail(ErrorCode::kParseError, "talk entries need a string 'id'");
    Talk talk{t["id"].get<std::string>(), std::nullopt};
    if (t.contains("priority")) {
      if (!t["priority"].is_number_integer())
        Fail(ErrorCode::kParseError, "talk priority must be an integer");
      talk.priority = t["priority"].get<int>();
    }
    instance.talks.push_back(std::move(talk));
  }
  for (const json& s : doc["slots"]) {
    if (!s.contains("id") || !s["id"].is_string() || !s.contains("start_utc_min") ||
        !s.contains("duration_min"))
      Fail(ErrorCode::kParseError, "slot entries need 'id', 'start_utc_min', 'duration_min'");
    Slot slot;
    slot.id = s["id"].get<std::string>();
    if (!s["start_utc_min"].is_number_integer() || !s["duration_min"].is_number_integer())
      Fail(ErrorCode::kParseError, "slot times must be integer minutes");
    slot.start_utc_min = s["start_utc_min"].get<std::int64_t>();
    slot.duration_min = s["duration_min"].get<std::int64_t>();
    instance.slots.push_back(std::move(slot));
  }

  instance.interest = MatrixFromJson(doc["interest"], instance.participants.size(),
                                     instance.talks.size(), "interest");
  instance.availability = MatrixFromJson(doc["availability"], instance.participants.size(),
                                         instance.slots.size(), "availability");
  if (doc.contains("weights")) {
    for (const json& w : doc["weights"])
      instance.weights.push_back(NumberField(w, "weights"));
  }
  ValidateInstance(instance);
  return instance;
}

namespace {

std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) {
    // Trim surrounding whitespace; the triplet files carry no quoted fields.
    const auto first = field.find_first_not_of(" \t\r");
    const auto last = field.find_last_not_of(" \t\r");
    fields.push_back(first == std::string::npos ? "" : field.substr(first, last - first + 1));
  }
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

std::vector<std::vector<std::string>> ReadCsv(const std::string& path) {
  std::istringstream in(ReadTextFile(path));
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    rows.push_back(SplitCsvLine(line));
  }
  if (rows.empty()) Fail(ErrorCode::kParseError, "empty CSV file '" + path + "'");
  return rows;
}

double ParseCsvNumber(const std::string& text, const std::string& path) {
  try {
    std::size_t used = 0;
    double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    Fail(ErrorCode::kParseError, "bad number '" + text + "' in '" + path + "'");
  }
}

std::int64_t ParseCsvInt(const std::string& text, const std::string& path) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    Fail(ErrorCode::kParseError, "bad integer '" + text + "' in '" + path + "'");
  }
}

SchedulingInstance LoadCsvTriplet(const std::string& base) {
  const std::string slots_path = base + ".slots.csv";
  const std::string interest_path = base + ".interest.csv";
  const std::string avail_path = base + ".availability.csv";

  SchedulingInstance instance;

  auto slot_rows = ReadCsv(slots_path);
  if (slot_rows.front() != std::vector<std::string>{"slot_id", "start_utc_min", "duration_min"})
    Fail(ErrorCode::kParseError,
         "'" + slots_path + "' must start with header slot_id,start_utc_min,duration_min");
  for (std::size_t r = 1; r < slot_rows.size(); ++r) {
    const auto& row = slot_rows[r];
    if (row.size() != 3)
      Fail(ErrorCode::kParseError, "'" + slots_path + "' rows need 3 columns");
    instance.slots.push_back(
        {row[0], ParseCsvInt(row[1], slots_path), ParseCsvInt(row[2], slots_path)});
  }

  auto interest_rows = ReadCsv(interest_path);
  const auto& talk_header = interest_rows.front();
  if (talk_header.size() < 2 || talk_header[0] != "participant_id")
    Fail(ErrorCode::kParseError,
         "'" + interest_path + "' must start with header participant_id,<talk ids...>");
  for (std::size_t c = 1; c < talk_header.size(); ++c)
    instance.talks.push_back({talk_header[c], std::nullopt});

  const std::size_t n = instance.talks.size();
  instance.interest = Matrix(interest_rows.size() - 1, n);
  for (std::size_t r = 1; r < interest_rows.size(); ++r) {
    const auto& row = interest_rows[r];
    if (row.size() != n + 1)
      Fail(ErrorCode::kDimensionMismatch, "'" + interest_path + "' row " + std::to_string(r) +
                                              " does not match the talk header");
    instance.participants.push_back(row[0]);
    for (std::size_t c = 0; c < n; ++c)
      instance.interest(r - 1, c) = ParseCsvNumber(row[c + 1], interest_path);
  }

  auto avail_rows = ReadCsv(avail_path);
  const auto& slot_header = avail_rows.front();
  if (slot_header.size() != instance.slots.size() + 1 || slot_header[0] != "participant_id")
    Fail(ErrorCode::kDimensionMismatch,
         "'" + avail_path + "' header does not match the slots file");
  for (std::size_t c = 1; c < slot_header.size(); ++c)
    if (slot_header[c] != instance.slots[c - 1].id)
      Fail(ErrorCode::kDimensionMismatch,
           "'" + avail_path + "' slot ids do not match the slots file");
  if (avail_rows.size() - 1 != instance.participants.size())
    Fail(ErrorCode::kDimensionMismatch,
         "interest and availability files disagree on the participant count");
  instance.availability = Matrix(instance.participants.size(), instance.slots.size());
  for (std::size_t r = 1; r < avail_rows.size(); ++r) {
    const auto& row = avail_rows[r];
    if (row.size() != instance.slots.size() + 1)
      Fail(ErrorCode::kDimensionMismatch, "'" + avail_path + "' row " + std::to_string(r) +
                                              " does not match the slot header");
    if (row[0] != instance.participants[r - 1])
      Fail(ErrorCode::kDimensionMismatch,
           "participant ids differ between interest and availability files");
    for (std::size_t c = 0; c < instance.slots.size(); ++c)
      instance.availability(r - 1, c) = ParseCsvNumber(row[c + 1], avail_path);
  }

  ValidateInstance(instance);
  return instance;
}

void SaveCsvTriplet(const SchedulingInstance& instance, const std::string& base) {
  std::ostringstream slots;
  slots << "slot_id,start_utc_min,duration_min\n";
  for (const auto& s : instance.slots)
    slots << s.id << "," << s.start_utc_min << "," << s.duration_min << "\n";
  WriteTextFile(base + ".slots.csv", slots.str());

  auto write_matrix = [&](const Matrix& matrix, const std::vector<std::string>& col_ids,
                          const std::string& path) {
    std::ostringstream out;
    out << "participant_id";
    for (const auto& id : col_ids) out << "," << id;
    out << "\n";
    out.precision(17);
    for (std::size_t r = 0; r < matrix.rows(); ++r) {
      out << instance.participants[r];
      for (std::size_t c = 0; c < matrix.cols(); ++c) out << "," << matrix(r, c);
      out << "\n";
    }
    WriteTextFile(path, out.str());
  };
  std::vector<std::string> talk_ids, slot_ids;
  for (const auto& t : instance.talks) talk_ids.push_back(t.id);
  for (const auto& s : instance.slots) slot_ids.push_back(s.id);
  write_matrix(instance.interest, talk_ids, base + ".interest.csv");
  write_matrix(instance.availability, slot_ids, base + ".availability.csv");
}

}  // namespace

SchedulingInstance LoadInstance(const std::string& path, InstanceFormat format) {
  if (format == InstanceFormat::kJson) return InstanceFromJson(ReadTextFile(path));
  return LoadCsvTriplet(path);
}

void SaveInstance(const SchedulingInstance& instance, const std::string& path,
                  InstanceFormat format) {
  if (format == InstanceFormat::kJson) {
    WriteTextFile(path, InstanceToJson(instance));
  } else {
    SaveCsvTriplet(instance, path);
  }
}

std::string ScheduleToJson(const SchedulingInstance& instance,
                           const MultiRoundSchedule& schedule) {
  ValidateMultiRound(instance, schedule);
  json rounds = json::array();
  for (const auto& round : schedule.rounds) {
    auto pairs = round.assignment;
    std::sort(pairs.begin(), pairs.end());
    json entries = json::array();
    for (const auto& [t, s] : pairs)
      entries.push_back({{"talk", instance.talks[t].id}, {"slot", instance.slots[s].id}});
    rounds.push_back(std::move(entries));
  }
  json doc;
  doc["rounds"] = std::move(rounds);
  return doc.dump(2) + "\n";
}

MultiRoundSchedule ScheduleFromJson(const SchedulingInstance& instance,
                                    const std::string& text) {
  json doc = ParseJsonText(text);
  if (!doc.is_object() || !doc.contains("rounds") || !doc["rounds"].is_array())
    Fail(ErrorCode::kParseError, "schedule JSON must be {\"rounds\": [...]}");
  MultiRoundSchedule schedule;
  for (const json& round_json : doc["rounds"]) {
    if (!round_json.is_array())
      Fail(ErrorCode::kParseError, "each round must be an array of {talk, slot} pairs");
    Schedule round;
    for (const json& entry : round_json) {
      if (!entry.contains("talk") || !entry.contains("slot"))
        Fail(ErrorCode::kParseError, "schedule entries need 'talk' and 'slot'");
      const std::string talk_id = entry["talk"].get<std::string>();
      const std::string slot_id = entry["slot"].get<std::string>();
      const int t = instance.talk_index(talk_id);
      if (t < 0) Fail(ErrorCode::kUnknownTalkId, "unknown talk id '" + talk_id + "'");
      const int s = instance.slot_index(slot_id);
      if (s < 0) Fail(ErrorCode::kUnknownSlotId, "unknown slot id '" + slot_id + "'");
      round.assignment.emplace_back(t, s);
    }
    std::sort(round.assignment.begin(), round.assignment.end());
    schedule.rounds.push_back(std::move(round));
  }
  ValidateMultiRound(instance, schedule);
  return schedule;
}

void SaveSchedule(const SchedulingInstance& instance, const MultiRoundSchedule& schedule,
                  const std::string& path) {
  WriteTextFile(path, ScheduleToJson(instance, schedule));
}

MultiRoundSchedule LoadSchedule(const SchedulingInstance& instance,
                                const std::string& path) {
  return ScheduleFromJson(instance, ReadTextFile(path));
}

}  // namespace fairconf
