#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace vfa {

/// Comma-separated writer with "#"-prefixed header comments carrying the
/// resolved run configuration.
class CsvWriter {
  public:
    explicit CsvWriter(const std::string& path) : out_(path) {
        if (!out_) throw std::runtime_error("cannot open " + path);
        out_.precision(12);
    }

    void comment(const std::string& key, const std::string& value) {
        out_ << "# " << key << "=" << value << "\n";
    }
    template <typename T>
    void comment_val(const std::string& key, const T& value) {
        std::ostringstream ss;
        ss.precision(12);
        ss << value;
        comment(key, ss.str());
    }

    void header(const std::vector<std::string>& cols) { line(cols); }

    template <typename... Ts>
    void row(const Ts&... vals) {
        bool first = true;
        ((out_ << (first ? "" : ","), first = false, out_ << vals), ...);
        out_ << "\n";
    }

  private:
    void line(const std::vector<std::string>& cols) {
        for (std::size_t i = 0; i < cols.size(); ++i)
            out_ << cols[i] << (i + 1 < cols.size() ? "," : "");
        out_ << "\n";
    }

    std::ofstream out_;
};

}  // namespace vfa
