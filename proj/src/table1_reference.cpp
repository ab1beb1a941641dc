#include <sstream>
#include <stdexcept>

#include "crl_atlas/loci.hpp"

namespace crl_atlas {

// Formulas for every partition of 3 <= r <= 7, one per line, in the order
// and with the term order of the published table.
const std::string& table1_reference_text() {
    static const std::string text = R"TABLE(
3;0;4;3;1*4
3;1;3;3;1*3
2,1;0;5;3;1*3,2
2,1;1;4;3;2*2,2
4;0;5;4;1*5
4;1;4;4;1*4
3,1;0;6;4;1*4,2
3,1;1;5;4;1*3,2
2,2;0;6;4;1*3,3
2,2;1;5;4;1*3,2
2,2;2;4;4;1*2,2
2,1,1;0;7;4;1*3,2,2
2,1,1;1;6;4;3*2,2,2
5;0;6;5;1*6
5;1;5;5;1*5
4,1;0;7;5;1*5,2
4,1;1;6;5;1*4,2
3,2;0;7;5;1*4,3
3,2;1;6;5;1*4,2 + 2*3,3
3,2;2;5;5;1*3,2
3,1,1;0;8;5;1*4,2,2
3,1,1;1;7;5;1*3,2,2
2,2,1;0;8;5;1*3,3,2
2,2,1;1;7;5;2*3,2,2
2,2,1;2;6;5;3*2,2,2
2,1,1,1;0;9;5;1*3,2,2,2
2,1,1,1;1;8;5;4*2,2,2,2
6;0;7;6;1*7
6;1;6;6;1*6
5,1;0;8;6;1*6,2
5,1;1;7;6;1*5,2
4,2;0;8;6;1*5,3
4,2;1;7;6;1*5,2 + 1*4,3
4,2;2;6;6;1*4,2
4,1,1;0;9;6;1*5,2,2
4,1,1;1;8;6;1*4,2,2
3,3;0;8;6;1*4,4
3,3;1;7;6;1*4,3
3,3;2;6;6;1*3,3
3,2,1;0;9;6;1*4,3,2
3,2,1;1;8;6;2*4,2,2 + 2*3,3,2
3,2,1;2;7;6;2*3,2,2
3,1,1,1;0;10;6;1*4,2,2,2
3,1,1,1;1;9;6;1*3,2,2,2
2,2,2;0;9;6;1*3,3,3
2,2,2;1;8;6;1*3,3,2
2,2,2;2;7;6;1*3,2,2
2,2,2;3;6;6;1*2,2,2
2,2,1,1;0;10;6;1*3,3,2,2
2,2,1,1;1;9;6;3*3,2,2,2
2,2,1,1;2;8;6;6*2,2,2,2
2,1,1,1,1;0;11;6;1*3,2,2,2,2
2,1,1,1,1;1;10;6;5*2,2,2,2,2
7;0;8;7;1*8
7;1;7;7;1*7
6,1;0;9;7;1*7,2
6,1;1;8;7;1*6,2
5,2;0;9;7;1*6,3
5,2;1;8;7;1*6,2 + 1*5,3
5,2;2;7;7;1*5,2
5,1,1;0;10;7;1*6,2,2
5,1,1;1;9;7;1*5,2,2
4,3;0;9;7;1*5,4
4,3;1;8;7;1*5,3 + 2*4,4
4,3;2;7;7;1*4,3
4,2,1;0;10;7;1*5,3,2
4,2,1;1;9;7;2*5,2,2 + 1*4,3,2
4,2,1;2;8;7;2*4,2,2
4,1,1,1;0;11;7;1*5,2,2,2
4,1,1,1;1;10;7;1*4,2,2,2
3,3,1;0;10;7;1*4,4,2
3,3,1;1;9;7;1*4,3,2
3,3,1;2;8;7;1*3,3,2
3,2,2;0;10;7;1*4,3,3
3,2,2;1;9;7;1*4,3,2 + 3*3,3,3
3,2,2;2;8;7;2*3,3,2 + 1*4,2,2
3,2,2;3;7;7;1*3,2,2
3,2,1,1;0;11;7;1*4,3,2,2
3,2,1,1;1;10;7;3*4,2,2,2 + 2*3,3,2,2
3,2,1,1;2;9;7;3*3,2,2,2
3,1,1,1,1;0;12;7;1*4,2,2,2,2
3,1,1,1,1;1;11;7;1*3,2,2,2,2
2,2,2,1;0;11;7;1*3,3,3,2
2,2,2,1;1;10;7;2*3,3,2,2
2,2,2,1;2;9;7;3*3,2,2,2
2,2,2,1;3;8;7;4*2,2,2,2
2,2,1,1,1;0;12;7;1*3,3,2,2,2
2,2,1,1,1;1;11;7;4*3,2,2,2,2
2,2,1,1,1;2;10;7;10*2,2,2,2,2
2,1,1,1,1,1;0;13;7;1*3,2,2,2,2,2
2,1,1,1,1,1;1;12;7;6*2,2,2,2,2,2
)TABLE";
    return text;
}

// Rows "d,k,count_0,count_1,..." of the published partition-count tables.
const std::string& count_table_reference_text(Parity parity) {
    static const std::string odd = R"TABLE(
5,3,1,1
7,4,1,2,1
9,5,1,3,3,1
11,6,1,3,5,4,1
13,7,1,3,6,8,5,1
15,8,1,3,7,11,12,6,1
17,9,1,3,7,13,18,16,7,1
19,10,1,3,7,14,23,27,21,8,1
21,11,1,3,7,15,26,37,39,27,9,1
23,12,1,3,7,15,28,44,57,54,33,10,1
25,13,1,3,7,15,29,49,71,84,72,40,11,1
)TABLE";
    static const std::string even = R"TABLE(
6,3,1,2,1
8,4,1,2,3,1
10,5,1,2,4,4,1
12,6,1,2,5,7,5,1
14,7,1,2,5,9,10,6,1
16,8,1,2,5,10,15,14,7,1
18,9,1,2,5,11,18,23,19,8,1
20,10,1,2,5,11,20,30,34,24,9,1
22,11,1,2,5,11,21,35,47,47,30,10,1
24,12,1,2,5,11,22,38,58,70,64,37,11,1
26,13,1,2,5,11,22,40,65,90,101,84,44,12,1
)TABLE";
    return parity == Parity::odd ? odd : even;
}

std::vector<CountRow> parse_count_table(const std::string& text) {
    std::vector<CountRow> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::string field;
        std::vector<std::int64_t> values;
        while (std::getline(fields, field, ',')) values.push_back(std::stoll(field));
        if (values.size() < 3) throw std::invalid_argument("malformed count table row: " + line);
        rows.push_back({static_cast<int>(values[0]), static_cast<int>(values[1]),
                        std::vector<std::int64_t>(values.begin() + 2, values.end())});
    }
    return rows;
}

}  // namespace crl_atlas
