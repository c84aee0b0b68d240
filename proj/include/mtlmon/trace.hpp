#pragma once

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace mtlmon {

/// A state variable is either a real number or a boolean.
using Value = std::variant<double, bool>;

enum class ValueType { Number, Boolean };

inline ValueType type_of(const Value& v) {
  return std::holds_alternative<double>(v) ? ValueType::Number
                                           : ValueType::Boolean;
}

/// Variable names and types, fixed by the first event (or CSV header) and
/// shared by every event of a trace.
class Schema {
 public:
  Schema(std::vector<std::string> names, std::vector<ValueType> types);

  const std::vector<std::string>& names() const { return names_; }
  const std::vector<ValueType>& types() const { return types_; }
  std::size_t size() const { return names_.size(); }
  std::optional<std::size_t> index_of(std::string_view name) const;

 private:
  std::vector<std::string> names_;
  std::vector<ValueType> types_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// One trace event: a timestamp plus a full variable snapshot.
struct TimedState {
  double tau = 0.0;
  std::shared_ptr<const Schema> schema;
  std::vector<Value> values;

  /// nullptr when the variable is not part of the schema.
  const Value* find(std::string_view name) const;
};

/// Finite sequence of timed states with non-decreasing timestamps.
class TimedStateSequence {
 public:
  TimedStateSequence(std::shared_ptr<const Schema> schema,
                     std::vector<TimedState> events);

  const std::shared_ptr<const Schema>& schema() const { return schema_; }
  const std::vector<TimedState>& events() const { return events_; }
  std::size_t size() const { return events_.size(); }

 private:
  std::shared_ptr<const Schema> schema_;
  std::vector<TimedState> events_;
};

enum class TraceFormat { Csv, Jsonl };

/// Streaming trace reader: validates the schema and timestamp monotonicity
/// while handing out one event at a time, in order.
class TraceReader {
 public:
  TraceReader(std::istream& in, TraceFormat format);
  ~TraceReader();

  /// Next event, or nullopt at end of input. Throws ParseError,
  /// SchemaError or MonotonicityError with the offending row cited.
  std::optional<TimedState> next();

  /// Available once the first event (CSV: the header) has been read.
  std::shared_ptr<const Schema> schema() const { return schema_; }

  std::size_t events_read() const { return events_read_; }

 private:
  std::optional<TimedState> next_csv();
  std::optional<TimedState> next_jsonl();
  bool read_line(std::string& line);

  std::istream& in_;
  TraceFormat format_;
  std::shared_ptr<const Schema> schema_;
  std::vector<std::string> csv_header_;
  std::size_t row_ = 0;  // 1-based physical line number
  std::size_t events_read_ = 0;
  double last_tau_ = 0.0;
};

/// Reads and validates a whole trace; empty input raises EmptyTraceError.
TimedStateSequence parse_trace(std::istream& in, TraceFormat format);

void write_csv(std::ostream& out, const TimedStateSequence& trace);
void write_jsonl(std::ostream& out, const TimedStateSequence& trace);

}  // namespace mtlmon
