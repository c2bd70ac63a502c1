/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <homred/errors.hh>
#include <homred/formats.hh>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

using std::string;
using std::string_view;
using std::to_string;
using std::vector;

namespace homred
{
    namespace
    {
        auto split_words(string_view line) -> vector<string_view>
        {
            vector<string_view> words;
            std::size_t pos = 0;
            while (pos < line.size()) {
                while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r'))
                    ++pos;
                std::size_t start = pos;
                while (pos < line.size() && ! (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r'))
                    ++pos;
                if (pos > start)
                    words.push_back(line.substr(start, pos - start));
            }
            return words;
        }

        auto parse_int(string_view word, int line) -> long long
        {
            long long value = 0;
            auto [end, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
            if (ec != std::errc{} || end != word.data() + word.size())
                throw ParseError{ line, "expected an integer, got '" + string{ word } + "'" };
            return value;
        }

        template <typename F_>
        auto for_each_line(string_view text, F_ && f) -> void
        {
            int number = 0;
            while (! text.empty()) {
                ++number;
                auto end = text.find('\n');
                string_view line = text.substr(0, end);
                text = end == string_view::npos ? string_view{} : text.substr(end + 1);
                auto words = split_words(line);
                if (! words.empty())
                    f(number, words);
            }
        }

        auto vertex(string_view word, int line, long long count) -> int
        {
            auto v = parse_int(word, line);
            if (v < 1 || v > count)
                throw VertexOutOfRange{ line, "vertex " + string{ word } + " is not in 1.." + to_string(count) };
            return static_cast<int>(v - 1);
        }
    }

    auto read_graph(string_view text) -> SimpleGraph
    {
        long long n = -1, m = -1;
        std::set<Edge> seen;
        vector<Edge> edges;

        for_each_line(text, [&] (int line, const vector<string_view> & w) {
            if (w[0] == "c")
                return;
            if (w[0] == "p") {
                if (n != -1)
                    throw ParseError{ line, "second problem line" };
                if (w.size() != 4 || w[1] != "edge")
                    throw ParseError{ line, "expected 'p edge <n> <m>'" };
                n = parse_int(w[2], line);
                m = parse_int(w[3], line);
                if (n < 0 || m < 0 || n > 100'000'000)
                    throw ParseError{ line, "bad vertex or edge count" };
            }
            else if (w[0] == "e") {
                if (n == -1)
                    throw ParseError{ line, "edge before the problem line" };
                if (w.size() != 3)
                    throw ParseError{ line, "expected 'e <u> <v>'" };
                int u = vertex(w[1], line, n), v = vertex(w[2], line, n);
                if (u == v)
                    throw LoopEdge{ line, "loop at vertex " + to_string(u + 1) };
                Edge e{ std::min(u, v), std::max(u, v) };
                if (! seen.insert(e).second)
                    throw DuplicateEdge{ line, "edge " + to_string(e.first + 1) + " " + to_string(e.second + 1) + " repeated" };
                edges.push_back(e);
            }
            else
                throw ParseError{ line, "unknown line type '" + string{ w[0] } + "'" };
        });

        if (n == -1)
            throw ParseError{ 0, "missing problem line" };
        if (static_cast<long long>(edges.size()) != m)
            throw ParseError{ 0, "problem line declares " + to_string(m) + " edges, found " + to_string(edges.size()) };
        return SimpleGraph::from_edges(static_cast<int>(n), edges);
    }

    auto write_graph(const SimpleGraph & g, const vector<string> & comments) -> string
    {
        std::ostringstream out;
        for (auto & c : comments)
            out << "c " << c << '\n';
        out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
        for (auto & [u, v] : g.edges())
            out << "e " << u + 1 << ' ' << v + 1 << '\n';
        return out.str();
    }

    auto read_lists(string_view text, int pattern_size, int target_size) -> Lists
    {
        Lists result(pattern_size);
        vector<bool> given(pattern_size, false);

        for_each_line(text, [&] (int line, const vector<string_view> & w) {
            if (w[0] == "c")
                return;
            if (w[0] != "l" || w.size() < 2)
                throw ParseError{ line, "expected 'l <v> <t> ...'" };
            int v = vertex(w[1], line, pattern_size);
            if (given[v])
                throw ParseError{ line, "second list for vertex " + string{ w[1] } };
            given[v] = true;
            for (std::size_t i = 2 ; i < w.size() ; ++i)
                result[v].push_back(vertex(w[i], line, target_size));
            std::sort(result[v].begin(), result[v].end());
            result[v].erase(std::unique(result[v].begin(), result[v].end()), result[v].end());
        });

        return result;
    }

    auto write_lists(const Lists & lists) -> string
    {
        std::ostringstream out;
        for (std::size_t v = 0 ; v < lists.size() ; ++v) {
            out << "l " << v + 1;
            for (int t : lists[v])
                out << ' ' << t + 1;
            out << '\n';
        }
        return out.str();
    }

    auto read_witness(string_view text, int pattern_size) -> Witness
    {
        Witness result;
        result.mapping.assign(pattern_size, -1);

        for_each_line(text, [&] (int line, const vector<string_view> & w) {
            if (w[0] == "c")
                return;
            if (w[0] != "w" || w.size() != 3)
                throw ParseError{ line, "expected 'w <v> <t>'" };
            int v = vertex(w[1], line, pattern_size);
            auto t = parse_int(w[2], line);
            if (t < 1 || t > std::numeric_limits<int>::max())
                throw VertexOutOfRange{ line, "image " + string{ w[2] } + " is not a vertex" };
            if (result.mapping[v] != -1)
                throw ParseError{ line, "second image for vertex " + string{ w[1] } };
            result.mapping[v] = static_cast<int>(t - 1);
        });

        for (int v = 0 ; v < pattern_size ; ++v)
            if (result.mapping[v] == -1)
                throw ParseError{ 0, "no image for vertex " + to_string(v + 1) };
        return result;
    }

    auto write_witness(const Witness & w) -> string
    {
        std::ostringstream out;
        for (std::size_t v = 0 ; v < w.mapping.size() ; ++v)
            out << "w " << v + 1 << ' ' << w.mapping[v] + 1 << '\n';
        return out.str();
    }

    auto read_file(const string & path) -> string
    {
        std::ifstream in{ path, std::ios::binary };
        if (! in)
            throw Error{ "cannot open " + path };
        std::ostringstream contents;
        contents << in.rdbuf();
        return contents.str();
    }

    auto write_file(const string & path, string_view contents) -> void
    {
        std::ofstream out{ path, std::ios::binary };
        if (! out)
            throw Error{ "cannot write " + path };
        out << contents;
    }
}
