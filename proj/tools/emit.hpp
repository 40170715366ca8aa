// Deterministic JSON/CSV emission for the command-line tool. Output bytes
// depend only on the values written: fixed key order (insertion order),
// fixed indentation, floats always through "%.17g", "\n" line endings.
#pragma once

#include <cstdio>
#include <filesystem>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace emit {

inline std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

class Json {
 public:
  static Json number(double v) { return Json(g17(v)); }
  static Json integer(long long v) { return Json(std::to_string(v)); }
  static Json boolean(bool v) { return Json(v ? "true" : "false"); }
  static Json string(const std::string& s) { return Json(quote(s)); }
  static Json array() {
    Json j;
    j.kind_ = Kind::array;
    return j;
  }
  static Json object() {
    Json j;
    j.kind_ = Kind::object;
    return j;
  }

  Json& push(Json item) {
    require(Kind::array);
    items_.emplace_back("", std::move(item));
    return *this;
  }
  template <typename Range>
  Json& push_numbers(const Range& values) {
    for (double v : values) push(number(v));
    return *this;
  }
  Json& set(const std::string& key, Json value) {
    require(Kind::object);
    items_.emplace_back(key, std::move(value));
    return *this;
  }

  std::string dump() const {
    std::string out;
    write(out, 0);
    out += "\n";
    return out;
  }

 private:
  enum class Kind { scalar, array, object };

  Json() = default;
  explicit Json(std::string text) : text_(std::move(text)) {}

  void require(Kind k) const {
    if (kind_ != k) throw std::logic_error("json node kind mismatch");
  }

  static std::string quote(const std::string& s) {
    std::string out = "\"";
    for (unsigned char c : s) {
      switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
          if (c < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof(buf), "\\u%04x", c);
            out += buf;
          } else {
            out += static_cast<char>(c);
          }
      }
    }
    out += "\"";
    return out;
  }

  void write(std::string& out, int depth) const {
    if (kind_ == Kind::scalar) {
      out += text_;
      return;
    }
    const char open = kind_ == Kind::array ? '[' : '{';
    const char close = kind_ == Kind::array ? ']' : '}';
    if (items_.empty()) {
      out += open;
      out += close;
      return;
    }
    const std::string pad(2 * (depth + 1), ' ');
    out += open;
    for (std::size_t i = 0; i < items_.size(); ++i) {
      out += i == 0 ? "\n" : ",\n";
      out += pad;
      if (kind_ == Kind::object) {
        out += quote(items_[i].first);
        out += ": ";
      }
      items_[i].second.write(out, depth + 1);
    }
    out += "\n";
    out.append(2 * depth, ' ');
    out += close;
  }

  Kind kind_ = Kind::scalar;
  std::string text_;
  std::vector<std::pair<std::string, Json>> items_;
};

// One CSV document: header once, then rows; floats via g17.
class Csv {
 public:
  explicit Csv(std::vector<std::string> header) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (i) text_ += ",";
      text_ += header[i];
    }
    text_ += "\n";
  }
  void row(const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) text_ += ",";
      text_ += g17(values[i]);
    }
    text_ += "\n";
  }
  void raw_row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) text_ += ",";
      text_ += cells[i];
    }
    text_ += "\n";
  }
  const std::string& text() const { return text_; }

 private:
  std::string text_;
};

inline void write_file(const std::filesystem::path& path, const std::string& content) {
  std::unique_ptr<std::FILE, int (*)(std::FILE*)> f(
      std::fopen(path.string().c_str(), "wb"), &std::fclose);
  if (!f) throw std::runtime_error("cannot open for writing: " + path.string());
  if (std::fwrite(content.data(), 1, content.size(), f.get()) != content.size()) {
    throw std::runtime_error("short write: " + path.string());
  }
}

}  // namespace emit
