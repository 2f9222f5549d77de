#include "percount/config.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <variant>

#include "percount/error.hpp"

namespace percount {

namespace {

struct Value {
    enum class Kind { Integer, Word, List } kind = Kind::Integer;
    std::int64_t integer = 0;
    std::string word;
    std::vector<Value> items;
};

class ValueParser {
public:
    ValueParser(std::string_view text, std::size_t line) : s_(text), line_(line) {}

    Value parse() {
        Value v = value();
        skip_space();
        if (pos_ != s_.size()) error("unexpected trailing text '" + std::string(s_.substr(pos_)) + "'");
        return v;
    }

private:
    [[noreturn]] void error(const std::string& msg) const {
        fail(ErrorCode::ParseError, "line " + std::to_string(line_) + ": " + msg);
    }

    void skip_space() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    Value value() {
        skip_space();
        if (pos_ == s_.size()) error("missing value");
        const char c = s_[pos_];
        if (c == '[') return list();
        if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) return integer();
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            Value v;
            v.kind = Value::Kind::Word;
            v.word = std::string(s_.substr(start, pos_ - start));
            return v;
        }
        error(std::string("unexpected character '") + c + "'");
    }

    Value integer() {
        const std::size_t start = pos_;
        if (s_[pos_] == '+') ++pos_;
        const char* first = s_.data() + pos_;
        if (s_[pos_] == '-') ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        Value v;
        auto [ptr, ec] = std::from_chars(first, s_.data() + pos_, v.integer);
        if (ec != std::errc() || ptr != s_.data() + pos_) {
            error("malformed integer '" + std::string(s_.substr(start, pos_ - start)) + "'");
        }
        return v;
    }

    Value list() {
        ++pos_;  // '['
        Value v;
        v.kind = Value::Kind::List;
        skip_space();
        if (pos_ < s_.size() && s_[pos_] == ']') {
            ++pos_;
            return v;
        }
        while (true) {
            v.items.push_back(value());
            skip_space();
            if (pos_ == s_.size()) error("unterminated list");
            if (s_[pos_] == ',') {
                ++pos_;
                continue;
            }
            if (s_[pos_] == ']') {
                ++pos_;
                return v;
            }
            error(std::string("expected ',' or ']' but found '") + s_[pos_] + "'");
        }
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    std::size_t line_;
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

[[noreturn]] void field_error(std::size_t line, const std::string& key, const std::string& msg) {
    fail(ErrorCode::ParseError, "line " + std::to_string(line) + ": field '" + key + "': " + msg);
}

std::int64_t as_integer(const Value& v, std::size_t line, const std::string& key) {
    if (v.kind != Value::Kind::Integer) field_error(line, key, "expected an integer");
    return v.integer;
}

std::uint64_t as_positive(const Value& v, std::size_t line, const std::string& key) {
    const std::int64_t x = as_integer(v, line, key);
    if (x <= 0) field_error(line, key, "expected a positive integer");
    return static_cast<std::uint64_t>(x);
}

std::vector<std::int64_t> as_int_list(const Value& v, std::size_t line, const std::string& key) {
    if (v.kind != Value::Kind::List) field_error(line, key, "expected a list of integers like [1, 0, 2]");
    std::vector<std::int64_t> out;
    for (const Value& item : v.items) out.push_back(as_integer(item, line, key));
    if (out.empty()) field_error(line, key, "coefficient list is empty");
    return out;
}

std::array<std::int64_t, 4> as_matrix(const Value& v, std::size_t line, const std::string& key) {
    if (v.kind != Value::Kind::List || v.items.size() != 2) {
        field_error(line, key, "expected a 2x2 matrix like [[a, b], [c, d]]");
    }
    std::array<std::int64_t, 4> m{};
    for (std::size_t r = 0; r < 2; ++r) {
        const Value& row = v.items[r];
        if (row.kind != Value::Kind::List || row.items.size() != 2) {
            field_error(line, key, "expected a 2x2 matrix like [[a, b], [c, d]]");
        }
        for (std::size_t c = 0; c < 2; ++c) m[2 * r + c] = as_integer(row.items[c], line, key);
    }
    return m;
}

}  // namespace

SystemConfig parse_config_syntax(std::string_view text) {
    SystemConfig cfg;
    std::string section;
    std::set<std::string> seen;
    bool have_p = false, have_num = false, have_den = false;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[' && line.back() == ']' && line.find('=') == std::string_view::npos) {
            section = std::string(trim(line.substr(1, line.size() - 2)));
            if (section != "field" && section != "map" && section != "group" && section != "options") {
                fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": unknown section [" + section + "]");
            }
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        const std::string key(trim(line.substr(0, eq)));
        if (key.empty()) fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": missing key");
        if (section.empty()) {
            fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": key '" + key + "' outside any section");
        }
        if (!seen.insert(section + "." + key).second) field_error(line_no, key, "duplicate key");
        const Value v = ValueParser(line.substr(eq + 1), line_no).parse();

        if (section == "field") {
            if (key != "p") field_error(line_no, key, "unknown key in [field]");
            const std::int64_t p = as_integer(v, line_no, key);
            if (p < 2) field_error(line_no, key, "p must be at least 2");
            cfg.p = static_cast<std::uint64_t>(p);
            have_p = true;
        } else if (section == "map") {
            if (key == "numerator") {
                if (v.kind == Value::Kind::Word) {
                    if (v.word != "identity") field_error(line_no, key, "the only word allowed is 'identity'");
                    cfg.identity_map = true;
                } else {
                    cfg.numerator = as_int_list(v, line_no, key);
                }
                have_num = true;
            } else if (key == "denominator") {
                if (v.kind == Value::Kind::Word && v.word == "identity") {
                    cfg.identity_map = true;
                } else {
                    cfg.denominator = as_int_list(v, line_no, key);
                }
                have_den = true;
            } else {
                field_error(line_no, key, "unknown key in [map]");
            }
        } else if (section == "group") {
            cfg.generators.push_back(GeneratorSpec{key, as_matrix(v, line_no, key)});
        } else {
            if (key == "nmax") {
                cfg.nmax = as_positive(v, line_no, key);
            } else if (key == "zeta_order") {
                cfg.zeta_order = as_positive(v, line_no, key);
            } else if (key == "field_cap") {
                cfg.field_cap = as_positive(v, line_no, key);
            } else if (key == "group_cap") {
                cfg.group_cap = as_positive(v, line_no, key);
            } else {
                field_error(line_no, key, "unknown key in [options]");
            }
        }
    }
    if (!have_p) fail(ErrorCode::ParseError, "missing [field] p");
    if (!have_num) fail(ErrorCode::ParseError, "missing [map] numerator");
    if (!cfg.identity_map && !have_den) fail(ErrorCode::ParseError, "missing [map] denominator");
    if (cfg.identity_map && !cfg.numerator.empty()) {
        fail(ErrorCode::ParseError, "identity map cannot also list coefficients");
    }
    return cfg;
}

RationalMap build_map(const SystemConfig& cfg) {
    if (cfg.identity_map) return RationalMap::identity(cfg.p);
    return RationalMap::from_affine(cfg.p, cfg.numerator, cfg.denominator);
}

DynSystem build_system(const SystemConfig& cfg) {
    std::vector<MobiusAut> gens;
    std::vector<std::string> names;
    for (const auto& g : cfg.generators) {
        gens.push_back(MobiusAut::make(cfg.p, g.matrix[0], g.matrix[1], g.matrix[2], g.matrix[3]));
        names.push_back(g.name);
    }
    return DynSystem(build_map(cfg), std::move(gens), std::move(names), SystemLimits{cfg.field_cap, cfg.group_cap});
}

void validate_config(SystemConfig& cfg) {
    if (!fp::is_prime(cfg.p)) fail(ErrorCode::NotPrime, std::to_string(cfg.p) + " is not prime");
    const DynSystem sys = build_system(cfg);
    cfg.group_order = sys.group().order();
    cfg.group_exponent = sys.group().exponent();
    cfg.working_degree = cfg.nmax * cfg.group_exponent;
    if (checked_power(cfg.p, cfg.working_degree, cfg.field_cap) == 0) {
        fail(ErrorCode::FieldTooLarge, "counting up to n = " + std::to_string(cfg.nmax) + " needs F_" +
                                           std::to_string(cfg.p) + "^" + std::to_string(cfg.working_degree) +
                                           ", above the field cap " + std::to_string(cfg.field_cap));
    }
}

SystemConfig parse_config(std::string_view text) {
    SystemConfig cfg = parse_config_syntax(text);
    validate_config(cfg);
    return cfg;
}

}  // namespace percount
