#ifndef HYPERHALL_IO_TEXT_FORMAT_HPP
#define HYPERHALL_IO_TEXT_FORMAT_HPP

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "../error.hpp"

namespace hyperhall::io
{

/// A scheme file: optional "# name: X" tag, a "n rank" header, then n rows of
/// n relation labels. Labels are canonical after parsing: 0 on the diagonal
/// and 0..rank-1 in use.
struct SchemeFile
{
    std::string name;
    int n_points = 0;
    int rank = 0;
    std::vector<std::vector<int>> matrix;
    std::vector<std::string> comments; // other '#' lines, without the '#'
    std::vector<std::string> warnings;
};

/// A group file: optional "# name: X" tag, the order n, then the n x n Cayley
/// table with entry (x, g) = xg.
struct GroupFile
{
    std::string name;
    int order = 0;
    std::vector<std::vector<int>> table;
};

namespace detail
{

struct Line
{
    int number; // 1-based
    std::string_view text;
};

inline std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

inline std::vector<Line> split_lines(std::string_view text)
{
    std::vector<Line> out;
    int number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        ++number;
        out.push_back({number, text.substr(start, end - start)});
        if (end == text.size())
            break;
        start = end + 1;
    }
    return out;
}

/// Whitespace-separated integers, or nothing if some token is not one.
inline std::optional<std::vector<int>> integers(std::string_view s)
{
    std::vector<int> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r'))
            ++i;
        if (i == s.size())
            break;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r')
            ++j;
        int value = 0;
        auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + j, value);
        if (ec != std::errc{} || ptr != s.data() + j)
            return std::nullopt;
        out.push_back(value);
        i = j;
    }
    return out;
}

[[noreturn]] inline void syntax_error(const Line &line, const std::string &what)
{
    throw Error(ErrorKind::SyntaxError, "line " + std::to_string(line.number) + ": " + what, {line.number});
}

inline bool is_comment(std::string_view t) { return !t.empty() && t.front() == '#'; }

inline std::optional<std::string> name_tag(std::string_view t)
{
    std::string_view body = trim(t.substr(1));
    if (body.substr(0, 5) != "name:")
        return std::nullopt;
    return std::string(trim(body.substr(5)));
}

/// Reads `n` rows of `n` integers starting at lines[pos], skipping blank and
/// comment lines. Throws NotSquare on a wrong row length or missing rows.
inline std::vector<std::vector<int>> read_rows(const std::vector<Line> &lines, std::size_t &pos, int n,
                                               std::vector<std::string> *comments)
{
    std::vector<std::vector<int>> rows;
    while (static_cast<int>(rows.size()) < n) {
        if (pos >= lines.size())
            throw Error(ErrorKind::NotSquare,
                        "expected " + std::to_string(n) + " rows, found " + std::to_string(rows.size()),
                        {static_cast<int>(rows.size())});
        const Line &line = lines[pos++];
        std::string_view t = trim(line.text);
        if (t.empty())
            continue;
        if (is_comment(t)) {
            if (comments)
                comments->emplace_back(t.substr(1));
            continue;
        }
        auto row = integers(t);
        if (!row)
            syntax_error(line, "expected integers");
        if (static_cast<int>(row->size()) != n)
            throw Error(ErrorKind::NotSquare,
                        "line " + std::to_string(line.number) + ": row has " + std::to_string(row->size()) +
                            " entries, expected " + std::to_string(n),
                        {line.number});
        rows.push_back(std::move(*row));
    }
    return rows;
}

/// Relabels so that the label of point pair (0,0) becomes 0 and the others
/// follow in ascending numeric order. Returns true if anything changed.
inline bool canonicalize(std::vector<std::vector<int>> &m, int &distinct)
{
    std::map<int, int> relabel;
    for (const auto &row : m)
        for (int v : row)
            relabel.emplace(v, 0);
    distinct = static_cast<int>(relabel.size());
    const int diagonal = m[0][0];
    int next = 1;
    bool changed = false;
    for (auto &[label, target] : relabel) {
        target = label == diagonal ? 0 : next++;
        changed = changed || target != label;
    }
    if (changed)
        for (auto &row : m)
            for (int &v : row)
                v = relabel.at(v);
    return changed;
}

inline SchemeFile finish_scheme(std::string name, int n, std::optional<int> declared_rank,
                                std::vector<std::vector<int>> rows, std::vector<std::string> comments,
                                const Line &header)
{
    SchemeFile f;
    f.name = std::move(name);
    f.n_points = n;
    f.matrix = std::move(rows);
    f.comments = std::move(comments);
    int distinct = 0;
    if (canonicalize(f.matrix, distinct))
        f.warnings.push_back("relation labels remapped to 0..rank-1 with the diagonal label as 0");
    if (declared_rank && *declared_rank != distinct)
        throw Error(ErrorKind::LabelGap,
                    "line " + std::to_string(header.number) + ": header declares rank " +
                        std::to_string(*declared_rank) + " but " + std::to_string(distinct) + " labels occur",
                    {*declared_rank, distinct});
    f.rank = distinct;
    return f;
}

} // namespace detail

/// Parses one scheme file. Throws SyntaxError (witness: line), NotSquare,
/// or LabelGap (witness: declared rank, labels found).
inline SchemeFile parse_scheme(std::string_view text)
{
    auto lines = detail::split_lines(text);
    std::string name;
    std::vector<std::string> comments;
    std::size_t pos = 0;
    for (; pos < lines.size(); ++pos) {
        std::string_view t = detail::trim(lines[pos].text);
        if (t.empty())
            continue;
        if (!detail::is_comment(t))
            break;
        if (auto tag = detail::name_tag(t); tag && name.empty())
            name = *tag;
        else
            comments.emplace_back(t.substr(1));
    }
    if (pos == lines.size())
        throw Error(ErrorKind::SyntaxError, "missing \"n rank\" header", {static_cast<int>(lines.size())});
    const detail::Line header = lines[pos++];
    auto head = detail::integers(detail::trim(header.text));
    if (!head || head->size() != 2 || (*head)[0] < 1 || (*head)[1] < 1)
        detail::syntax_error(header, "expected header \"n rank\"");
    const int n = (*head)[0];
    auto rows = detail::read_rows(lines, pos, n, &comments);
    for (; pos < lines.size(); ++pos) {
        std::string_view t = detail::trim(lines[pos].text);
        if (t.empty())
            continue;
        if (detail::is_comment(t)) {
            comments.emplace_back(t.substr(1));
            continue;
        }
        if (detail::integers(t))
            throw Error(ErrorKind::NotSquare, "line " + std::to_string(lines[pos].number) + ": extra row",
                        {lines[pos].number});
        detail::syntax_error(lines[pos], "unexpected text after the matrix");
    }
    return detail::finish_scheme(std::move(name), n, (*head)[1], std::move(rows), std::move(comments), header);
}

/// Canonical text of a scheme file: name tag, header, rows.
inline std::string render_scheme(const SchemeFile &f)
{
    std::ostringstream os;
    if (!f.name.empty())
        os << "# name: " << f.name << "\n";
    os << f.n_points << " " << f.rank << "\n";
    for (const auto &row : f.matrix) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? " " : "") << row[i];
        os << "\n";
    }
    return os.str();
}

inline SchemeFile make_scheme_file(std::string name, const std::vector<std::vector<int>> &matrix)
{
    SchemeFile f;
    f.name = std::move(name);
    f.n_points = static_cast<int>(matrix.size());
    f.matrix = matrix;
    int distinct = 0;
    detail::canonicalize(f.matrix, distinct);
    f.rank = distinct;
    return f;
}

/// Splits a catalogue into its schemes. Accepts blocks with a "n rank" header
/// and bare matrices whose first row starts with the diagonal label 0; other
/// non-comment text is kept in the preceding scheme's comments. Throws
/// UnrecognizedCatalogueFormat when nothing parses.
inline std::vector<SchemeFile> parse_catalogue(std::string_view text)
{
    auto lines = detail::split_lines(text);
    std::vector<SchemeFile> out;
    std::string pending_name;
    std::vector<std::string> pending_comments;
    std::size_t pos = 0;
    while (pos < lines.size()) {
        const detail::Line line = lines[pos];
        std::string_view t = detail::trim(line.text);
        if (t.empty()) {
            ++pos;
            continue;
        }
        if (detail::is_comment(t)) {
            if (auto tag = detail::name_tag(t))
                pending_name = *tag;
            else
                pending_comments.emplace_back(t.substr(1));
            ++pos;
            continue;
        }
        auto ints = detail::integers(t);
        if (!ints || ints->empty()) {
            if (!out.empty())
                out.back().comments.emplace_back(t);
            ++pos;
            continue;
        }
        try {
            if (ints->size() == 2 && (*ints)[0] >= 1 && (*ints)[0] != 0 && (*ints)[1] >= 1) {
                ++pos;
                auto rows = detail::read_rows(lines, pos, (*ints)[0], nullptr);
                out.push_back(detail::finish_scheme(std::move(pending_name), (*ints)[0], (*ints)[1], std::move(rows),
                                                    std::move(pending_comments), line));
            } else if ((*ints)[0] == 0) {
                const int n = static_cast<int>(ints->size());
                auto rows = detail::read_rows(lines, pos, n, nullptr);
                out.push_back(detail::finish_scheme(std::move(pending_name), n, std::nullopt, std::move(rows),
                                                    std::move(pending_comments), line));
            } else {
                throw Error(ErrorKind::UnrecognizedCatalogueFormat,
                            "line " + std::to_string(line.number) + ": neither a header nor a matrix row",
                            {line.number});
            }
        } catch (const Error &e) {
            if (e.kind() == ErrorKind::UnrecognizedCatalogueFormat)
                throw;
            throw Error(ErrorKind::UnrecognizedCatalogueFormat,
                        "block at line " + std::to_string(line.number) + ": " + e.what(), {line.number});
        }
        pending_name.clear();
        pending_comments.clear();
    }
    if (out.empty())
        throw Error(ErrorKind::UnrecognizedCatalogueFormat, "no scheme matrices found");
    return out;
}

inline std::string render_catalogue(const std::vector<SchemeFile> &schemes)
{
    std::string out;
    for (const auto &f : schemes)
        out += render_scheme(f);
    return out;
}

/// Parses a group file. Throws SyntaxError or NotSquare.
inline GroupFile parse_group(std::string_view text)
{
    auto lines = detail::split_lines(text);
    GroupFile g;
    std::size_t pos = 0;
    for (; pos < lines.size(); ++pos) {
        std::string_view t = detail::trim(lines[pos].text);
        if (t.empty())
            continue;
        if (!detail::is_comment(t))
            break;
        if (auto tag = detail::name_tag(t); tag && g.name.empty())
            g.name = *tag;
    }
    if (pos == lines.size())
        throw Error(ErrorKind::SyntaxError, "missing order line", {static_cast<int>(lines.size())});
    const detail::Line header = lines[pos++];
    auto head = detail::integers(detail::trim(header.text));
    if (!head || head->size() != 1 || (*head)[0] < 1)
        detail::syntax_error(header, "expected the group order");
    g.order = (*head)[0];
    g.table = detail::read_rows(lines, pos, g.order, nullptr);
    for (; pos < lines.size(); ++pos) {
        std::string_view t = detail::trim(lines[pos].text);
        if (t.empty() || detail::is_comment(t))
            continue;
        if (detail::integers(t))
            throw Error(ErrorKind::NotSquare, "line " + std::to_string(lines[pos].number) + ": extra row",
                        {lines[pos].number});
        detail::syntax_error(lines[pos], "unexpected text after the table");
    }
    return g;
}

inline std::string render_group(const GroupFile &g)
{
    std::ostringstream os;
    if (!g.name.empty())
        os << "# name: " << g.name << "\n";
    os << g.order << "\n";
    for (const auto &row : g.table) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? " " : "") << row[i];
        os << "\n";
    }
    return os.str();
}

enum class FileKind
{
    Scheme,
    Group,
};

/// Scheme files have a two-number header, group files a one-number header.
inline FileKind detect_kind(std::string_view text)
{
    for (const auto &line : detail::split_lines(text)) {
        std::string_view t = detail::trim(line.text);
        if (t.empty() || detail::is_comment(t))
            continue;
        auto ints = detail::integers(t);
        if (ints && ints->size() == 1)
            return FileKind::Group;
        return FileKind::Scheme;
    }
    return FileKind::Scheme;
}

} // namespace hyperhall::io

#endif // HYPERHALL_IO_TEXT_FORMAT_HPP
