#include "gqap/instance.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "gqap/rng.hpp"

namespace gqap {

namespace {

struct Token {
    std::string text;
    int line = 0;
};

[[noreturn]] void parse_fail(int line, const std::string& section, const std::string& what) {
    std::ostringstream msg;
    msg << "parse error (line " << line;
    if (!section.empty())
        msg << ", section " << section;
    msg << "): " << what;
    throw GqapError(msg.str());
}

bool as_number(const std::string& text, double& out) {
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end;
}

// One input line after comment stripping: its tokens and, when the line held
// a "# name:" comment, the carried name.
struct Line {
    std::vector<Token> tokens;
    int line = 0;
};

struct RawFile {
    std::vector<Line> lines; // non-empty lines only
    std::string name;
    bool has_name = false;
};

RawFile read_lines(std::istream& in) {
    RawFile raw;
    std::string text;
    int line_no = 0;
    while (std::getline(in, text)) {
        ++line_no;
        std::string payload = text;
        if (auto hash = payload.find('#'); hash != std::string::npos) {
            std::string comment = payload.substr(hash + 1);
            payload.erase(hash);
            // the serializer stores the instance label as "# name: <label>"
            const std::string key = " name: ";
            if (!raw.has_name && comment.rfind(key, 0) == 0) {
                raw.name = comment.substr(key.size());
                raw.has_name = true;
            }
        }
        Line line;
        line.line = line_no;
        std::istringstream split(payload);
        std::string tok;
        while (split >> tok)
            line.tokens.push_back({tok, line_no});
        if (!line.tokens.empty())
            raw.lines.push_back(std::move(line));
    }
    return raw;
}

bool is_label_line(const Line& line) {
    if (line.tokens.size() != 1)
        return false;
    double ignored;
    return !as_number(line.tokens[0].text, ignored);
}

// Reads exactly `count` nonnegative numbers for `section`, starting at
// lines[pos], stopping early (with an error) at the next label line.
std::vector<double> read_block(const std::vector<Line>& lines, std::size_t& pos,
                               const std::string& section, std::size_t count, int label_line) {
    std::vector<double> values;
    values.reserve(count);
    while (values.size() < count) {
        if (pos >= lines.size() || is_label_line(lines[pos])) {
            int at = pos < lines.size() ? lines[pos].line : label_line;
            std::ostringstream what;
            what << "expected " << count << " values, found " << values.size();
            parse_fail(at, section, what.str());
        }
        for (const Token& tok : lines[pos].tokens) {
            if (values.size() == count)
                parse_fail(tok.line, section, "more values than the dimensions allow");
            double v;
            if (!as_number(tok.text, v))
                parse_fail(tok.line, section, "non-numeric token '" + tok.text + "'");
            if (!std::isfinite(v))
                parse_fail(tok.line, section, "non-finite value '" + tok.text + "'");
            if (v < 0)
                parse_fail(tok.line, section, "negative entry " + tok.text);
            values.push_back(v);
        }
        ++pos;
    }
    return values;
}

Matrix to_matrix(std::vector<double> values, int rows, int cols) {
    Matrix m(rows, cols);
    m.data = std::move(values);
    return m;
}

} // namespace

void validate_instance(const GqapInstance& inst) {
    const int m = inst.machine_count;
    const int n = inst.location_count;
    if (m < 1 || n < 1)
        throw GqapError("instance must have at least one machine and one location");
    auto check_matrix = [](const Matrix& mat, int rows, int cols, const char* what) {
        if (mat.rows != rows || mat.cols != cols ||
            mat.data.size() != static_cast<std::size_t>(rows) * cols)
            throw GqapError(std::string(what) + ": dimension mismatch");
        for (double v : mat.data)
            if (!std::isfinite(v) || v < 0)
                throw GqapError(std::string(what) + ": entries must be finite and nonnegative");
    };
    check_matrix(inst.flow, m, m, "flow");
    check_matrix(inst.distance, n, n, "distance");
    check_matrix(inst.assign_cost, m, n, "assign_cost");
    auto check_vector = [](const std::vector<double>& v, std::size_t len, const char* what) {
        if (v.size() != len)
            throw GqapError(std::string(what) + ": dimension mismatch");
        for (double x : v)
            if (!std::isfinite(x) || x < 0)
                throw GqapError(std::string(what) + ": entries must be finite and nonnegative");
    };
    check_vector(inst.requirement, static_cast<std::size_t>(m), "requirement");
    check_vector(inst.capacity, static_cast<std::size_t>(n), "capacity");
    if (!std::isfinite(inst.unit_cost) || inst.unit_cost < 0)
        throw GqapError("unit_cost must be finite and nonnegative");
}

GqapInstance parse_instance(std::istream& in) {
    RawFile raw = read_lines(in);
    const auto& lines = raw.lines;
    if (lines.empty())
        parse_fail(1, "header", "empty input, expected 'M N'");

    // header
    const Line& head = lines[0];
    if (head.tokens.size() != 2)
        parse_fail(head.line, "header", "expected exactly two integers 'M N'");
    double md, nd;
    if (!as_number(head.tokens[0].text, md) || !as_number(head.tokens[1].text, nd) ||
        md != std::floor(md) || nd != std::floor(nd) || md < 1 || nd < 1)
        parse_fail(head.line, "header", "M and N must be positive integers");
    const int m = static_cast<int>(md);
    const int n = static_cast<int>(nd);

    GqapInstance inst;
    inst.machine_count = m;
    inst.location_count = n;
    inst.name = raw.name;

    struct Section {
        const char* label;
        std::size_t count;
    };
    const Section sections[] = {
        {"A", static_cast<std::size_t>(m) * n},
        {"F", static_cast<std::size_t>(m) * m},
        {"D", static_cast<std::size_t>(n) * n},
        {"R", static_cast<std::size_t>(m)},
        {"C", static_cast<std::size_t>(n)},
    };

    std::size_t pos = 1;
    std::vector<std::vector<double>> blocks;
    for (const Section& sec : sections) {
        if (pos >= lines.size())
            parse_fail(lines.back().line, sec.label, "missing section");
        const Line& label = lines[pos];
        if (!is_label_line(label) || label.tokens[0].text != sec.label)
            parse_fail(label.line, sec.label,
                       "missing section label (found '" + label.tokens[0].text + "')");
        int label_line = label.line;
        ++pos;
        blocks.push_back(read_block(lines, pos, sec.label, sec.count, label_line));
    }
    inst.assign_cost = to_matrix(std::move(blocks[0]), m, n);
    inst.flow = to_matrix(std::move(blocks[1]), m, m);
    inst.distance = to_matrix(std::move(blocks[2]), n, n);
    inst.requirement = std::move(blocks[3]);
    inst.capacity = std::move(blocks[4]);

    if (pos < lines.size() && is_label_line(lines[pos]) && lines[pos].tokens[0].text == "UNIT_COST") {
        int label_line = lines[pos].line;
        ++pos;
        inst.unit_cost = read_block(lines, pos, "UNIT_COST", 1, label_line)[0];
    }
    if (pos < lines.size())
        parse_fail(lines[pos].line, "", "unexpected content '" + lines[pos].tokens[0].text + "'");

    validate_instance(inst);
    return inst;
}

GqapInstance parse_instance(const std::string& text) {
    std::istringstream in(text);
    return parse_instance(in);
}

GqapInstance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw GqapError("cannot open instance file: " + path);
    GqapInstance inst = parse_instance(in);
    return inst;
}

std::string serialize_instance(const GqapInstance& inst) {
    validate_instance(inst);
    std::ostringstream out;
    if (!inst.name.empty())
        out << "# name: " << inst.name << "\n";
    out << inst.machine_count << " " << inst.location_count << "\n";
    auto emit_matrix = [&out](const char* label, const Matrix& m) {
        out << label << "\n";
        for (int r = 0; r < m.rows; ++r) {
            for (int c = 0; c < m.cols; ++c)
                out << (c ? " " : "") << format_number(m(r, c));
            out << "\n";
        }
    };
    auto emit_vector = [&out](const char* label, const std::vector<double>& v) {
        out << label << "\n";
        for (std::size_t i = 0; i < v.size(); ++i)
            out << (i ? " " : "") << format_number(v[i]);
        out << "\n";
    };
    emit_matrix("A", inst.assign_cost);
    emit_matrix("F", inst.flow);
    emit_matrix("D", inst.distance);
    emit_vector("R", inst.requirement);
    emit_vector("C", inst.capacity);
    if (inst.unit_cost != 1.0)
        out << "UNIT_COST\n" << format_number(inst.unit_cost) << "\n";
    return out.str();
}

void save_instance(const GqapInstance& inst, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw GqapError("cannot open output file: " + path);
    out << serialize_instance(inst);
    if (!out)
        throw GqapError("write failed: " + path);
}

GqapInstance generate_random_instance(int machines, int locations, std::uint64_t seed,
                                      const GenRanges& ranges) {
    if (machines < 1 || locations < 1)
        throw GqapError("generator needs at least one machine and one location");
    auto check_range = [](int lo, int hi, const char* what) {
        if (lo > hi || lo < 0)
            throw GqapError(std::string("invalid range for ") + what);
    };
    check_range(ranges.flow_min, ranges.flow_max, "flow");
    check_range(ranges.distance_min, ranges.distance_max, "distance");
    check_range(ranges.assign_cost_min, ranges.assign_cost_max, "assign_cost");
    check_range(ranges.requirement_min, ranges.requirement_max, "requirement");
    check_range(ranges.slack_min, ranges.slack_max, "slack");

    Rng rng(seed);
    GqapInstance inst;
    inst.machine_count = machines;
    inst.location_count = locations;

    inst.requirement.resize(machines);
    for (double& r : inst.requirement)
        r = rng.uniform_int(ranges.requirement_min, ranges.requirement_max);

    // hidden assignment that the capacities are built around
    std::vector<int> seeded(machines);
    for (int& slot : seeded)
        slot = rng.uniform_int(1, locations);
    std::vector<double> load(locations, 0.0);
    for (int i = 0; i < machines; ++i)
        load[seeded[i] - 1] += inst.requirement[i];

    inst.capacity.resize(locations);
    for (int k = 0; k < locations; ++k)
        inst.capacity[k] = load[k] + rng.uniform_int(ranges.slack_min, ranges.slack_max);

    inst.flow = Matrix(machines, machines);
    for (int i = 0; i < machines; ++i)
        for (int j = 0; j < machines; ++j)
            inst.flow(i, j) = i == j ? 0 : rng.uniform_int(ranges.flow_min, ranges.flow_max);

    inst.distance = Matrix(locations, locations);
    for (int k = 0; k < locations; ++k)
        for (int l = 0; l < locations; ++l)
            inst.distance(k, l) =
                k == l ? 0 : rng.uniform_int(ranges.distance_min, ranges.distance_max);

    inst.assign_cost = Matrix(machines, locations);
    for (int i = 0; i < machines; ++i)
        for (int k = 0; k < locations; ++k)
            inst.assign_cost(i, k) = rng.uniform_int(ranges.assign_cost_min, ranges.assign_cost_max);

    std::ostringstream name;
    name << "rand-" << machines << "x" << locations << "-s" << seed;
    inst.name = name.str();
    validate_instance(inst);
    return inst;
}

} // namespace gqap
