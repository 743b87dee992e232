#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "cli.hpp"

namespace spinlift::cli {

namespace {

void write_number(std::ostream& out, double x) {
  if (!std::isfinite(x)) {
    out << "null";
    return;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  out << buf;
}

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

void write_value(std::ostream& out, const Json& j, int depth) {
  const std::string pad(2 * (depth + 1), ' ');
  const std::string close(2 * depth, ' ');
  switch (j.type()) {
    case Json::value_t::number_float:
      write_number(out, j.get<double>());
      return;
    case Json::value_t::object: {
      if (j.empty()) {
        out << "{}";
        return;
      }
      out << "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out << ",\n";
        first = false;
        out << pad << Json(key).dump() << ": ";
        write_value(out, value, depth + 1);
      }
      out << "\n" << close << "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out << "[]";
        return;
      }
      // Rows of numbers stay on one line.
      if (std::all_of(j.begin(), j.end(), is_scalar)) {
        out << "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out << ", ";
          write_value(out, j[i], depth + 1);
        }
        out << "]";
        return;
      }
      out << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out << ",\n";
        out << pad;
        write_value(out, j[i], depth + 1);
      }
      out << "\n" << close << "]";
      return;
    }
    default:
      out << j.dump();
      return;
  }
}

}  // namespace

void write(std::ostream& out, const Json& doc) {
  write_value(out, doc, 0);
  out << "\n";
}

std::string dump(const Json& doc) {
  std::ostringstream out;
  write(out, doc);
  return out.str();
}

}  // namespace spinlift::cli
