#include "adjalg/genspec.hpp"

#include <cctype>
#include <charconv>
#include <cstddef>

#include "adjalg/errors.hpp"

namespace adjalg {

namespace {

class SpecParser {
  public:
    SpecParser(const std::string& text, std::vector<std::string>* notes)
        : text_(text), notes_(notes) {}

    Graph parse() {
        Graph g = family();
        skip_space();
        if (pos_ != text_.size()) {
            throw ParseError("graph spec: trailing characters after position " +
                             std::to_string(pos_));
        }
        return g;
    }

  private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool try_consume(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!try_consume(c)) {
            throw ParseError(std::string("graph spec: expected '") + c + "' at position " +
                             std::to_string(pos_));
        }
    }

    std::string family_name() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_') {
                ++pos_;
            } else {
                break;
            }
        }
        if (start == pos_) {
            throw ParseError("graph spec: expected a family name at position " +
                             std::to_string(start));
        }
        std::string name = text_.substr(start, pos_ - start);
        for (char& c : name) {
            c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
            if (c == '_') c = '-';
        }
        return name;
    }

    long long integer() {
        skip_space();
        std::size_t end = pos_;
        if (end < text_.size() && text_[end] == '-') ++end;
        while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
        long long value = 0;
        const auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + end, value);
        if (ec != std::errc() || ptr != text_.data() + end || end == pos_) {
            throw ParseError("graph spec: expected an integer at position " +
                             std::to_string(pos_));
        }
        pos_ = end;
        return value;
    }

    std::size_t size_argument(const std::string& family) {
        const long long value = integer();
        if (value < 0) throw ParseError("graph spec: " + family + " needs a non-negative size");
        return static_cast<std::size_t>(value);
    }

    Graph family() {
        const std::string name = family_name();
        if (name == "petersen") {
            no_arguments();
            return petersen();
        }
        if (name == "chordal-ring-12-4") {
            no_arguments();
            return chordal_ring_12_4();
        }
        if (name == "complete") return complete(one_size(name));
        if (name == "cycle") return cycle(one_size(name));
        if (name == "triangular") return triangular(one_size(name));
        if (name == "circulant") {
            expect('(');
            const std::size_t n = size_argument(name);
            expect(',');
            expect('{');
            std::vector<long long> connection;
            connection.push_back(integer());
            while (try_consume(',')) connection.push_back(integer());
            expect('}');
            expect(')');
            bool symmetrized = false;
            Graph g = circulant(n, connection, &symmetrized);
            if (symmetrized && notes_ != nullptr) {
                notes_->push_back("circulant connection set was symmetrized");
            }
            return g;
        }
        if (name == "kronecker") {
            expect('(');
            Graph a = family();
            expect(',');
            Graph b = family();
            expect(')');
            return kronecker(a, b);
        }
        throw ParseError("graph spec: unknown family '" + name + "'");
    }

    void no_arguments() {
        if (try_consume('(')) expect(')');
    }

    std::size_t one_size(const std::string& name) {
        expect('(');
        const std::size_t value = size_argument(name);
        expect(')');
        return value;
    }

    const std::string& text_;
    std::vector<std::string>* notes_;
    std::size_t pos_ = 0;
};

}  // namespace

Graph parse_graph_spec(const std::string& text, std::vector<std::string>* notes) {
    return SpecParser(text, notes).parse();
}

Graph load_graph_argument(const std::string& argument, std::vector<std::string>* notes) {
    constexpr const char* prefix = "gen:";
    if (argument.rfind(prefix, 0) == 0) {
        return parse_graph_spec(argument.substr(4), notes);
    }
    return read_edge_list_file(argument);
}

}  // namespace adjalg
