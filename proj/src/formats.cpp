#include "hardgame/formats.hpp"

#include <charconv>
#include <fmt/format.h>
#include <limits>
#include <map>
#include <set>

#include "json.hpp"

namespace hardgame {

SyntaxError::SyntaxError(std::size_t line, std::size_t column, const std::string& expectation)
    : Error(ErrorCode::SyntaxError, fmt::format("line {}, column {}: expected {}", line, column, expectation)),
      line_(line),
      column_(column) {}

namespace {

struct Token {
    std::string_view text;
    std::size_t column = 1;
};

struct Line {
    std::size_t number = 1;
    std::string_view raw;
    std::vector<Token> tokens;

    std::size_t end_column() const { return raw.size() + 1; }
};

std::vector<Token> tokenize(std::string_view raw) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < raw.size()) {
        while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
        if (i == raw.size()) break;
        const auto start = i;
        while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t') ++i;
        out.push_back({raw.substr(start, i - start), start + 1});
    }
    return out;
}

// Splits into lines, dropping blank lines and lines whose first token is
// `comment`. A final line without '\n' is accepted.
std::vector<Line> split_lines(std::string_view text, std::string_view comment) {
    std::vector<Line> out;
    std::size_t number = 1, pos = 0;
    while (pos < text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        auto raw = text.substr(pos, end - pos);
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        Line line{number, raw, tokenize(raw)};
        const bool skip =
            line.tokens.empty() || (!comment.empty() && line.tokens[0].text.substr(0, comment.size()) == comment);
        if (!skip) out.push_back(std::move(line));
        pos = end + 1;
        ++number;
    }
    return out;
}

// Cursor over the significant lines that knows where "end of input" is.
class Lines {
public:
    Lines(std::string_view text, std::string_view comment) : lines_(split_lines(text, comment)) {
        std::size_t n = 1;
        for (char c : text) n += c == '\n';
        eof_line_ = text.empty() || text.back() == '\n' ? n : n + 1;
    }

    bool done() const { return next_ == lines_.size(); }
    const Line& peek() const { return lines_[next_]; }
    const Line& take(const std::string& expectation) {
        if (done()) throw SyntaxError(eof_line_, 1, expectation);
        return lines_[next_++];
    }
    void expect_end() const {
        if (!done()) throw SyntaxError(peek().number, 1, "end of input");
    }

private:
    std::vector<Line> lines_;
    std::size_t next_ = 0;
    std::size_t eof_line_ = 1;
};

void expect_count(const Line& line, std::size_t count, const std::string& expectation) {
    if (line.tokens.size() < count) throw SyntaxError(line.number, line.end_column(), expectation);
    if (line.tokens.size() > count) throw SyntaxError(line.number, line.tokens[count].column, "end of line");
}

void expect_word(const Line& line, std::size_t i, std::string_view word) {
    if (line.tokens.size() <= i) throw SyntaxError(line.number, line.end_column(), fmt::format("'{}'", word));
    if (line.tokens[i].text != word)
        throw SyntaxError(line.number, line.tokens[i].column, fmt::format("'{}'", word));
}

template <class Int>
Int number(const Line& line, std::size_t i, const std::string& expectation, Int lo = 0,
           Int hi = std::numeric_limits<Int>::max()) {
    if (line.tokens.size() <= i) throw SyntaxError(line.number, line.end_column(), expectation);
    const auto& tok = line.tokens[i];
    Int value{};
    const auto* first = tok.text.data();
    const auto* last = first + tok.text.size();
    // Reject "+1" and leading zeros so that only the canonical spelling parses.
    const bool canonical = !tok.text.empty() && tok.text[0] != '+' &&
                           !(tok.text.size() > 1 && tok.text[0] == '0') &&
                           !(tok.text.size() > 2 && tok.text[0] == '-' && tok.text[1] == '0');
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (!canonical || ec != std::errc{} || ptr != last || value < lo || value > hi)
        throw SyntaxError(line.number, tok.column, expectation);
    return value;
}

template <class Arcs>
std::uint32_t parse_edges(std::string_view text, std::string_view tag, Arcs& arcs) {
    Lines lines(text, "c");
    const auto& header = lines.take("header 'p edge n m'");
    expect_word(header, 0, "p");
    expect_word(header, 1, "edge");
    const auto n = number<std::uint32_t>(header, 2, "vertex count");
    const auto m = number<std::uint32_t>(header, 3, "edge count");
    expect_count(header, 4, "edge count");
    const auto range = fmt::format("vertex in 1..{}", n);
    for (std::uint32_t j = 0; j < m; ++j) {
        const auto& line = lines.take(fmt::format("'{}' line {} of {}", tag, j + 1, m));
        expect_word(line, 0, tag);
        const auto u = number<std::uint32_t>(line, 1, range, 1, n);
        const auto v = number<std::uint32_t>(line, 2, range, 1, n);
        expect_count(line, 3, range);
        arcs.emplace_back(u - 1, v - 1);
    }
    lines.expect_end();
    return n;
}

template <class Arcs>
std::string serialize_edges(std::uint32_t n, const Arcs& arcs, char tag) {
    std::string out = fmt::format("p edge {} {}\n", n, arcs.size());
    for (const auto& [u, v] : arcs) out += fmt::format("{} {} {}\n", tag, u + 1, v + 1);
    return out;
}

}  // namespace

UGraph parse_ugraph(std::string_view text) {
    UGraph g;
    g.n = parse_edges(text, "e", g.edges);
    return g;
}

std::string serialize(const UGraph& g) { return serialize_edges(g.n, g.edges, 'e'); }

DGraph parse_dgraph(std::string_view text) {
    DGraph g;
    g.n = parse_edges(text, "a", g.arcs);
    return g;
}

std::string serialize(const DGraph& g) { return serialize_edges(g.n, g.arcs, 'a'); }

QuantifiedFormula parse_qbf(std::string_view text) {
    Lines lines(text, "c");
    const auto& header = lines.take("header 'p cnf n m'");
    expect_word(header, 0, "p");
    expect_word(header, 1, "cnf");
    QuantifiedFormula f;
    f.num_vars = number<std::uint32_t>(header, 2, "variable count");
    const auto m = number<std::uint32_t>(header, 3, "clause count");
    expect_count(header, 4, "clause count");
    const auto n = std::int64_t(f.num_vars);
    const auto var_range = fmt::format("variable in 1..{} or 0", n);
    const auto lit_range = fmt::format("non-zero literal in -{}..{}", n, n);

    while (!lines.done() && (lines.peek().tokens[0].text == "e" || lines.peek().tokens[0].text == "a")) {
        const auto& line = lines.take("");
        const auto q = line.tokens[0].text == "e" ? Quantifier::Exists : Quantifier::Forall;
        std::size_t i = 1;
        for (;; ++i) {
            const auto v = number<std::int64_t>(line, i, var_range, 0, n);
            if (v == 0) break;
            f.prefix.emplace_back(q, std::uint32_t(v));
        }
        if (i == 1) throw SyntaxError(line.number, line.tokens[1].column, "at least one variable");
        expect_count(line, i + 1, "");
    }
    for (std::uint32_t j = 0; j < m; ++j) {
        const auto& line = lines.take(fmt::format("clause {} of {}", j + 1, m));
        Clause c;
        for (std::size_t s = 0; s < 3; ++s) {
            const auto lit = number<std::int64_t>(line, s, lit_range, -n, n);
            if (lit == 0) throw SyntaxError(line.number, line.tokens[s].column, lit_range);
            c[s] = {std::uint32_t(lit < 0 ? -lit : lit), lit < 0};
        }
        if (number<std::int64_t>(line, 3, "terminating 0", 0, 0) != 0)
            throw SyntaxError(line.number, line.tokens[3].column, "terminating 0");
        expect_count(line, 4, "terminating 0");
        f.clauses.push_back(c);
    }
    lines.expect_end();
    return f;
}

std::string serialize(const QuantifiedFormula& f) {
    std::string out = fmt::format("p cnf {} {}\n", f.num_vars, f.clauses.size());
    for (std::size_t i = 0; i < f.prefix.size();) {
        const auto q = f.prefix[i].first;
        out += q == Quantifier::Exists ? "e" : "a";
        for (; i < f.prefix.size() && f.prefix[i].first == q; ++i) out += fmt::format(" {}", f.prefix[i].second);
        out += " 0\n";
    }
    for (const auto& c : f.clauses) {
        for (const auto& l : c) out += fmt::format("{}{} ", l.negated ? "-" : "", l.var);
        out += "0\n";
    }
    return out;
}

MonotoneCircuit parse_circuit(std::string_view text) {
    Lines lines(text, "#");
    MonotoneCircuit c;
    bool have_out = false;
    while (!lines.done()) {
        const auto& line = lines.take("");
        const auto head = line.tokens[0].text;
        if (head == "in") {
            if (line.tokens.size() < 2) throw SyntaxError(line.number, line.end_column(), "input name");
            const auto value = number<int>(line, 2, "input value 0 or 1", 0, 1);
            expect_count(line, 3, "");
            c.inputs.push_back({std::string(line.tokens[1].text), value == 1});
        } else if (head == "gate") {
            if (line.tokens.size() < 2) throw SyntaxError(line.number, line.end_column(), "gate name");
            if (line.tokens.size() < 3) throw SyntaxError(line.number, line.end_column(), "AND or OR");
            const auto kind = line.tokens[2].text;
            if (kind != "AND" && kind != "OR") throw SyntaxError(line.number, line.tokens[2].column, "AND or OR");
            expect_count(line, 5, "two gate operands");
            c.gates.push_back({std::string(line.tokens[1].text), kind == "AND" ? GateKind::And : GateKind::Or,
                               std::string(line.tokens[3].text), std::string(line.tokens[4].text)});
        } else if (head == "out") {
            if (have_out) throw SyntaxError(line.number, 1, "a single 'out' line");
            expect_count(line, 2, "output name");
            c.output = std::string(line.tokens[1].text);
            have_out = true;
        } else {
            throw SyntaxError(line.number, line.tokens[0].column, "'in', 'gate' or 'out'");
        }
    }
    if (!have_out) lines.take("'out' line");
    return c;
}

std::string serialize(const MonotoneCircuit& c) {
    std::string out;
    for (const auto& in : c.inputs) out += fmt::format("in {} {}\n", in.name, in.value ? 1 : 0);
    for (const auto& g : c.gates)
        out += fmt::format("gate {} {} {} {}\n", g.name, g.kind == GateKind::And ? "AND" : "OR", g.a, g.b);
    out += fmt::format("out {}\n", c.output);
    return out;
}

ray::RayLevel parse_ray_level(std::string_view text) {
    using ray::Kind;
    Lines lines(text, "");
    const auto& header = lines.take("header 'ray W H'");
    expect_word(header, 0, "ray");
    const auto w = number<std::uint32_t>(header, 1, "width", 1, 4096);
    const auto h = number<std::uint32_t>(header, 2, "height", 1, 4096);
    expect_count(header, 3, "height");

    auto level = ray::make_level(w, h);
    std::vector<ray::Tile*> rotating;
    std::uint32_t items = 0;
    for (std::uint32_t y = 0; y < h; ++y) {
        const auto& line = lines.take(fmt::format("row {} of {}", y + 1, h));
        if (line.raw.size() != w)
            throw SyntaxError(line.number, std::min<std::size_t>(line.raw.size(), w) + 1,
                              fmt::format("a row of exactly {} cells", w));
        for (std::uint32_t x = 0; x < w; ++x) {
            auto& tile = level.at({int(x), int(y)});
            const char ch = line.raw[x];
            switch (ch) {
                case '.': break;
                case '#': tile.kind = Kind::Opaque; break;
                case '=': tile.kind = Kind::Reflecting; break;
                case 'M': tile.kind = Kind::Mirror; break;
                case 'B': tile.kind = Kind::Beam; break;
                case 'X': tile.kind = Kind::Exit; break;
                case '*': tile = {Kind::Item, 0, false, 0, items++}; break;
                case 'o': tile.kind = Kind::Mine; break;
                case 'R':
                    tile = {Kind::Polarizator, 0, true, 0, 0};
                    rotating.push_back(&tile);
                    break;
                default:
                    if (ch >= '0' && ch <= '7') {
                        tile = {Kind::Polarizator, std::uint8_t(ch - '0'), false, 0, 0};
                    } else if (ch >= 'a' && ch <= 'z') {
                        tile = {Kind::Teleporter, 0, false, ch, 0};
                    } else {
                        throw SyntaxError(line.number, x + 1, "a cell character");
                    }
            }
        }
    }
    std::set<char> seen;
    while (!lines.done()) {
        const auto& line = lines.take("");
        expect_word(line, 0, "rbase");
        const auto letter = line.tokens.size() > 1 ? line.tokens[1].text : std::string_view{};
        const auto expectation = fmt::format("rotating polarizator letter a..{}", char('a' + rotating.size() - 1));
        if (letter.size() != 1 || letter[0] < 'a' || std::size_t(letter[0] - 'a') >= rotating.size() ||
            !seen.insert(letter[0]).second)
            throw SyntaxError(line.number, line.tokens.size() > 1 ? line.tokens[1].column : line.end_column(),
                              rotating.empty() ? "no rbase line (no rotating polarizators)" : expectation);
        const auto base = number<int>(line, 2, "orientation 0..7", 0, 7);
        expect_count(line, 3, "");
        rotating[std::size_t(letter[0] - 'a')]->orientation = std::uint8_t(base);
    }
    return level;
}

std::string serialize(const ray::RayLevel& level) {
    using ray::Kind;
    std::string out = fmt::format("ray {} {}\n", level.width, level.height);
    std::vector<int> bases;
    for (std::uint32_t y = 0; y < level.height; ++y) {
        for (std::uint32_t x = 0; x < level.width; ++x) {
            const auto& tile = level.at({int(x), int(y)});
            char ch = '.';
            switch (tile.kind) {
                case Kind::Empty: break;
                case Kind::Opaque: ch = '#'; break;
                case Kind::Reflecting: ch = '='; break;
                case Kind::Mirror: ch = 'M'; break;
                case Kind::Beam: ch = 'B'; break;
                case Kind::Exit: ch = 'X'; break;
                case Kind::Item: ch = '*'; break;
                case Kind::Mine: ch = 'o'; break;
                case Kind::Teleporter: ch = tile.pair; break;
                case Kind::Polarizator:
                    if (tile.rotating) {
                        ch = 'R';
                        bases.push_back(tile.orientation);
                    } else {
                        ch = char('0' + tile.orientation);
                    }
                    break;
            }
            out += ch;
        }
        out += '\n';
    }
    if (bases.size() > 26) throw Error(ErrorCode::TooLarge, "more than 26 rotating polarizators");
    for (std::size_t i = 0; i < bases.size(); ++i) out += fmt::format("rbase {} {}\n", char('a' + i), bases[i]);
    return out;
}

namespace {

using json = nlohmann::ordered_json;

struct JsonReader {
    [[noreturn]] void fail(const std::string& path, const std::string& what) const {
        throw SyntaxError(1, 1, fmt::format("{} at {}", what, path));
    }

    const json& field(const json& obj, const std::string& path, const char* key) const {
        if (!obj.is_object()) fail(path, "an object");
        const auto it = obj.find(key);
        if (it == obj.end()) fail(path, fmt::format("field '{}'", key));
        return *it;
    }

    void only(const json& obj, const std::string& path, std::initializer_list<const char*> keys) const {
        for (const auto& [k, _] : obj.items()) {
            bool known = false;
            for (const char* key : keys) known = known || k == key;
            if (!known) fail(path, fmt::format("no field '{}'", k));
        }
    }

    bool flag(const json& obj, const std::string& path, const char* key) const {
        const auto& v = field(obj, path, key);
        if (!v.is_boolean()) fail(path + "." + key, "a boolean");
        return v.get<bool>();
    }

    std::uint32_t count(const json& v, const std::string& path) const {
        if (!v.is_number_unsigned() || v.get<std::uint64_t>() > std::numeric_limits<std::uint32_t>::max())
            fail(path, "a non-negative integer");
        return v.get<std::uint32_t>();
    }

    std::uint32_t count(const json& obj, const std::string& path, const char* key) const {
        return count(field(obj, path, key), path + "." + key);
    }

    const json& array(const json& obj, const std::string& path, const char* key) const {
        const auto& v = field(obj, path, key);
        if (!v.is_array()) fail(path + "." + key, "an array");
        return v;
    }

    Capacity capacity(const json& obj, const char* key) const {
        const auto& v = field(obj, "$", key);
        if (v == "1") return Capacity::One;
        if (v == "inf") return Capacity::Unbounded;
        fail(std::string("$.") + key, "\"1\" or \"inf\"");
    }

    DoorAction action(const json& v, const std::string& path) const {
        only(v, path, {"door", "action"});
        const auto door = count(v, path, "door");
        const auto& op = field(v, path, "action");
        if (op == "open") return open_door(door);
        if (op == "close") return close_door(door);
        fail(path + ".action", "\"open\" or \"close\"");
    }
};

json to_json(const DoorAction& a) {
    return json{{"door", a.door}, {"action", a.op == DoorOp::Open ? "open" : "close"}};
}

}  // namespace

Level parse_level(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        // Convert the byte offset into a line and column.
        std::size_t line = 1, col = 1;
        const auto stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw SyntaxError(line, col, "well-formed JSON");
    }
    const JsonReader r;
    if (!doc.is_object()) r.fail("$", "an object");
    r.only(doc, "$",
           {"vertices", "edges", "doors", "start", "requireExit", "tokenCapacity", "keyCapacity", "initialTokens",
            "initialKeys", "markedEdge"});

    Level level;
    const auto& vertices = r.array(doc, "$", "vertices");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const auto& v = vertices[i];
        const auto path = fmt::format("$.vertices[{}]", i);
        if (!v.is_object()) r.fail(path, "an object");
        r.only(v, path, {"id", "mustVisit", "exit", "tokens", "keys", "plates", "buttons"});
        VertexSpec spec;
        spec.id = r.count(v, path, "id");
        spec.must_visit = r.flag(v, path, "mustVisit");
        spec.exit = r.flag(v, path, "exit");
        spec.tokens = r.count(v, path, "tokens");
        spec.keys = r.count(v, path, "keys");
        const auto& plates = r.array(v, path, "plates");
        for (std::size_t k = 0; k < plates.size(); ++k)
            spec.plates.push_back(r.action(plates[k], fmt::format("{}.plates[{}]", path, k)));
        const auto& buttons = r.array(v, path, "buttons");
        for (std::size_t b = 0; b < buttons.size(); ++b) {
            const auto bpath = fmt::format("{}.buttons[{}]", path, b);
            if (!buttons[b].is_array()) r.fail(bpath, "an array");
            Button button;
            for (std::size_t k = 0; k < buttons[b].size(); ++k)
                button.push_back(r.action(buttons[b][k], fmt::format("{}[{}]", bpath, k)));
            spec.buttons.push_back(std::move(button));
        }
        level.vertices.push_back(std::move(spec));
    }
    const auto& edges = r.array(doc, "$", "edges");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        const auto path = fmt::format("$.edges[{}]", i);
        if (!e.is_object()) r.fail(path, "an object");
        r.only(e, path, {"id", "from", "to", "oneWay", "singleUse", "toll", "door"});
        EdgeSpec spec;
        spec.id = r.count(e, path, "id");
        spec.from = r.count(e, path, "from");
        spec.to = r.count(e, path, "to");
        spec.one_way = r.flag(e, path, "oneWay");
        spec.single_use = r.flag(e, path, "singleUse");
        spec.toll = r.count(e, path, "toll");
        const auto& door = r.field(e, path, "door");
        if (!door.is_null()) spec.door = r.count(door, path + ".door");
        level.edges.push_back(spec);
    }
    const auto& doors = r.array(doc, "$", "doors");
    for (std::size_t i = 0; i < doors.size(); ++i) {
        const auto path = fmt::format("$.doors[{}]", i);
        if (!doors[i].is_object()) r.fail(path, "an object");
        r.only(doors[i], path, {"id", "initiallyOpen"});
        level.doors.push_back({r.count(doors[i], path, "id"), r.flag(doors[i], path, "initiallyOpen")});
    }
    level.start = r.count(doc, "$", "start");
    level.require_exit = r.flag(doc, "$", "requireExit");
    level.token_capacity = r.capacity(doc, "tokenCapacity");
    level.key_capacity = r.capacity(doc, "keyCapacity");
    level.initial_tokens = r.count(doc, "$", "initialTokens");
    level.initial_keys = r.count(doc, "$", "initialKeys");
    if (doc.contains("markedEdge")) level.marked_edge = r.count(doc, "$", "markedEdge");
    return level;
}

std::string serialize(const Level& level) {
    json doc;
    auto& vertices = doc["vertices"] = json::array();
    for (const auto& v : level.vertices) {
        json plates = json::array(), buttons = json::array();
        for (const auto& a : v.plates) plates.push_back(to_json(a));
        for (const auto& b : v.buttons) {
            json button = json::array();
            for (const auto& a : b) button.push_back(to_json(a));
            buttons.push_back(std::move(button));
        }
        vertices.push_back(json{{"id", v.id},
                                {"mustVisit", v.must_visit},
                                {"exit", v.exit},
                                {"tokens", v.tokens},
                                {"keys", v.keys},
                                {"plates", std::move(plates)},
                                {"buttons", std::move(buttons)}});
    }
    auto& edges = doc["edges"] = json::array();
    for (const auto& e : level.edges)
        edges.push_back(json{{"id", e.id},
                             {"from", e.from},
                             {"to", e.to},
                             {"oneWay", e.one_way},
                             {"singleUse", e.single_use},
                             {"toll", e.toll},
                             {"door", e.door ? json(*e.door) : json(nullptr)}});
    auto& doors = doc["doors"] = json::array();
    for (const auto& d : level.doors) doors.push_back(json{{"id", d.id}, {"initiallyOpen", d.initially_open}});
    doc["start"] = level.start;
    doc["requireExit"] = level.require_exit;
    doc["tokenCapacity"] = level.token_capacity == Capacity::One ? "1" : "inf";
    doc["keyCapacity"] = level.key_capacity == Capacity::One ? "1" : "inf";
    doc["initialTokens"] = level.initial_tokens;
    doc["initialKeys"] = level.initial_keys;
    if (level.marked_edge) doc["markedEdge"] = *level.marked_edge;
    return doc.dump(2) + "\n";
}

Certificate parse_certificate(std::string_view text) {
    Lines lines(text, "#");
    Certificate cert;
    while (!lines.done()) {
        const auto& line = lines.take("");
        const auto head = line.tokens[0].text;
        if (head == "t") {
            const auto e = number<std::uint32_t>(line, 1, "edge id");
            expect_count(line, 2, "edge id");
            cert.moves.push_back(Move::traverse(e));
        } else if (head == "p") {
            const auto v = number<std::uint32_t>(line, 1, "vertex id");
            const auto b = number<std::uint32_t>(line, 2, "button index");
            expect_count(line, 3, "button index");
            cert.moves.push_back(Move::press(v, b));
        } else {
            throw SyntaxError(line.number, line.tokens[0].column, "'t' or 'p'");
        }
    }
    return cert;
}

std::string serialize(const Certificate& cert) {
    std::string out;
    for (const auto& m : cert.moves) {
        if (m.kind == Move::Kind::Traverse)
            out += fmt::format("t {}\n", m.target);
        else
            out += fmt::format("p {} {}\n", m.target, m.button);
    }
    return out;
}

namespace {

void format_strategy(const oracle::QbfStrategy& s, std::int32_t node, std::size_t depth, std::string& out) {
    if (node < 0) return;
    const auto& n = s.nodes[std::size_t(node)];
    const std::string indent(2 * depth, ' ');
    if (n.quantifier == Quantifier::Exists) {
        out += fmt::format("{}e {} {}\n", indent, n.var, n.value ? 1 : 0);
        format_strategy(s, n.child[0], depth + 1, out);
    } else {
        for (int b = 0; b < 2; ++b) {
            out += fmt::format("{}a {} {}\n", indent, n.var, b);
            format_strategy(s, n.child[b], depth + 1, out);
        }
    }
}

}  // namespace

std::string format_answer(const oracle::Answer& answer) {
    std::string out = answer.decision ? "yes\n" : "no\n";
    std::visit(
        [&](const auto& w) {
            using W = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<W, oracle::HamCycle> || std::is_same_v<W, oracle::Path>) {
                const auto& vs = [&]() -> const std::vector<std::uint32_t>& {
                    if constexpr (std::is_same_v<W, oracle::HamCycle>)
                        return w.cycle;
                    else
                        return w.vertices;
                }();
                out += std::is_same_v<W, oracle::HamCycle> ? "cycle" : "path";
                for (auto v : vs) out += fmt::format(" {}", v + 1);
                out += '\n';
            } else if constexpr (std::is_same_v<W, oracle::QbfStrategy>) {
                if (!w.nodes.empty()) format_strategy(w, 0, 0, out);
            } else if constexpr (std::is_same_v<W, oracle::CircuitValues>) {
                for (const auto& [name, value] : w.values) out += fmt::format("value {} {}\n", name, value ? 1 : 0);
            }
        },
        answer.witness);
    return out;
}

}  // namespace hardgame
