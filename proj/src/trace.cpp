#include "mtlmon/trace.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "mtlmon/errors.hpp"
#include "mtlmon/interval.hpp"

namespace mtlmon {

Schema::Schema(std::vector<std::string> names, std::vector<ValueType> types)
    : names_(std::move(names)), types_(std::move(types)) {
  if (names_.size() != types_.size()) {
    throw SchemaError("schema name/type count mismatch");
  }
  if (names_.empty()) throw SchemaError("trace schema has no variables");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw SchemaError("empty variable name in schema");
    if (!index_.emplace(names_[i], i).second) {
      throw SchemaError("duplicate variable name '" + names_[i] + "'");
    }
  }
}

std::optional<std::size_t> Schema::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const Value* TimedState::find(std::string_view name) const {
  if (!schema) return nullptr;
  auto idx = schema->index_of(name);
  if (!idx) return nullptr;
  return &values[*idx];
}

TimedStateSequence::TimedStateSequence(std::shared_ptr<const Schema> schema,
                                       std::vector<TimedState> events)
    : schema_(std::move(schema)), events_(std::move(events)) {
  if (events_.empty()) throw EmptyTraceError("trace has no events");
  for (std::size_t i = 0; i + 1 < events_.size(); ++i) {
    if (events_[i + 1].tau < events_[i].tau) {
      throw MonotonicityError(
          "decreasing timestamp at event " + std::to_string(i + 2) + ": " +
          format_number(events_[i + 1].tau) + " after " +
          format_number(events_[i].tau));
    }
  }
}

namespace {

double parse_double(std::string_view cell, std::size_t row, std::size_t col) {
  double v = 0.0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last) {
    throw ParseError("unparseable numeric cell '" + std::string(cell) + "'",
                     row, col);
  }
  return v;
}

Value parse_cell(std::string_view cell, std::size_t row, std::size_t col) {
  if (cell == "true") return Value(true);
  if (cell == "false") return Value(false);
  return Value(parse_double(cell, row, col));
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == ',') {
      cells.push_back(trim(line.substr(start, i - start)));
      start = i + 1;
    }
  }
  return cells;
}

const char* type_name(ValueType t) {
  return t == ValueType::Number ? "number" : "boolean";
}

}  // namespace

TraceReader::TraceReader(std::istream& in, TraceFormat format)
    : in_(in), format_(format) {}

TraceReader::~TraceReader() = default;

bool TraceReader::read_line(std::string& line) {
  while (std::getline(in_, line)) {
    ++row_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!trim(line).empty()) return true;
  }
  return false;
}

std::optional<TimedState> TraceReader::next() {
  auto event = format_ == TraceFormat::Csv ? next_csv() : next_jsonl();
  if (!event) return std::nullopt;
  if (events_read_ > 0 && event->tau < last_tau_) {
    throw MonotonicityError("decreasing timestamp at row " +
                            std::to_string(row_) + ": " +
                            format_number(event->tau) + " after " +
                            format_number(last_tau_));
  }
  last_tau_ = event->tau;
  ++events_read_;
  return event;
}

std::optional<TimedState> TraceReader::next_csv() {
  std::string line;
  if (csv_header_.empty()) {
    if (!read_line(line)) return std::nullopt;
    auto cells = split_csv(line);
    if (cells.empty() || cells[0] != "time") {
      throw ParseError("CSV header must start with a 'time' column", row_, 1);
    }
    if (cells.size() < 2) {
      throw ParseError("CSV header declares no variables", row_, 1);
    }
    for (std::size_t i = 1; i < cells.size(); ++i) {
      csv_header_.emplace_back(cells[i]);
    }
  }
  if (!read_line(line)) return std::nullopt;
  auto cells = split_csv(line);
  if (cells.size() != csv_header_.size() + 1) {
    throw SchemaError("row " + std::to_string(row_) + " has " +
                      std::to_string(cells.size()) + " cells, expected " +
                      std::to_string(csv_header_.size() + 1));
  }
  TimedState event;
  event.tau = parse_double(cells[0], row_, 1);
  event.values.reserve(csv_header_.size());
  for (std::size_t i = 1; i < cells.size(); ++i) {
    event.values.push_back(parse_cell(cells[i], row_, i + 1));
  }
  if (!schema_) {
    std::vector<ValueType> types;
    types.reserve(event.values.size());
    for (const Value& v : event.values) types.push_back(type_of(v));
    schema_ = std::make_shared<Schema>(csv_header_, std::move(types));
  } else {
    for (std::size_t i = 0; i < event.values.size(); ++i) {
      if (type_of(event.values[i]) != schema_->types()[i]) {
        throw SchemaError("row " + std::to_string(row_) + ", column " +
                          std::to_string(i + 2) + ": variable '" +
                          schema_->names()[i] + "' is " +
                          type_name(schema_->types()[i]) + " but got " +
                          type_name(type_of(event.values[i])));
      }
    }
  }
  event.schema = schema_;
  return event;
}

std::optional<TimedState> TraceReader::next_jsonl() {
  std::string line;
  if (!read_line(line)) return std::nullopt;
  nlohmann::json obj;
  try {
    obj = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), row_, 1);
  }
  if (!obj.is_object()) {
    throw ParseError("JSONL line is not an object", row_, 1);
  }
  if (!obj.contains("time") || !obj["time"].is_number()) {
    throw ParseError("JSONL object lacks a numeric 'time' key", row_, 1);
  }
  TimedState event;
  event.tau = obj["time"].get<double>();

  auto value_of = [&](const nlohmann::json& v, const std::string& key) {
    if (v.is_boolean()) return Value(v.get<bool>());
    if (v.is_number()) return Value(v.get<double>());
    throw ParseError("variable '" + key + "' is neither number nor boolean",
                     row_, 1);
  };

  if (!schema_) {
    std::vector<std::string> names;
    std::vector<ValueType> types;
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      if (it.key() == "time") continue;
      Value v = value_of(it.value(), it.key());
      names.push_back(it.key());
      types.push_back(type_of(v));
      event.values.push_back(std::move(v));
    }
    if (names.empty()) {
      throw ParseError("JSONL object declares no variables", row_, 1);
    }
    schema_ = std::make_shared<Schema>(std::move(names), std::move(types));
  } else {
    if (obj.size() != schema_->size() + 1) {
      throw SchemaError("row " + std::to_string(row_) +
                        ": variable set differs from first event");
    }
    event.values.resize(schema_->size());
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      if (it.key() == "time") continue;
      auto idx = schema_->index_of(it.key());
      if (!idx) {
        throw SchemaError("row " + std::to_string(row_) +
                          ": unknown variable '" + it.key() + "'");
      }
      Value v = value_of(it.value(), it.key());
      if (type_of(v) != schema_->types()[*idx]) {
        throw SchemaError("row " + std::to_string(row_) + ": variable '" +
                          it.key() + "' is " +
                          type_name(schema_->types()[*idx]) + " but got " +
                          type_name(type_of(v)));
      }
      event.values[*idx] = std::move(v);
    }
  }
  event.schema = schema_;
  return event;
}

TimedStateSequence parse_trace(std::istream& in, TraceFormat format) {
  TraceReader reader(in, format);
  std::vector<TimedState> events;
  while (auto event = reader.next()) events.push_back(std::move(*event));
  if (events.empty()) throw EmptyTraceError("trace input contains no events");
  return TimedStateSequence(reader.schema(), std::move(events));
}

namespace {

void write_value(std::ostream& out, const Value& v) {
  if (std::holds_alternative<bool>(v)) {
    out << (std::get<bool>(v) ? "true" : "false");
  } else {
    out << format_number(std::get<double>(v));
  }
}

}  // namespace

void write_csv(std::ostream& out, const TimedStateSequence& trace) {
  out << "time";
  for (const std::string& name : trace.schema()->names()) out << "," << name;
  out << "\n";
  for (const TimedState& e : trace.events()) {
    out << format_number(e.tau);
    for (const Value& v : e.values) {
      out << ",";
      write_value(out, v);
    }
    out << "\n";
  }
}

void write_jsonl(std::ostream& out, const TimedStateSequence& trace) {
  for (const TimedState& e : trace.events()) {
    nlohmann::json obj;
    obj["time"] = e.tau;
    const auto& names = trace.schema()->names();
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (std::holds_alternative<bool>(e.values[i])) {
        obj[names[i]] = std::get<bool>(e.values[i]);
      } else {
        obj[names[i]] = std::get<double>(e.values[i]);
      }
    }
    out << obj.dump() << "\n";
  }
}

}  // namespace mtlmon
