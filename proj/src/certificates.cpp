#include <stdexcept>
#include <string>

#include "gridmatch/reduction.hpp"

namespace gridmatch {

namespace {

ZigzagMove remove(VertexLabel vertex, VertexLabel witness)
{
    return {ZigzagMove::Op::Remove, std::move(vertex), std::move(witness)};
}

ZigzagMove add(VertexLabel vertex, VertexLabel witness)
{
    return {ZigzagMove::Op::Add, std::move(vertex), std::move(witness)};
}

void require(bool ok, const std::string& message)
{
    if (!ok)
        throw std::invalid_argument(message);
}

}  // namespace

SplitCertificate x_split_certificate(int m, int n)
{
    require(m >= 2 && n >= 4, "X_n split certificate needs m >= 2 and n >= 4");
    // X_n \ N[e_{n-2}] carries the star e_n - {f^k_{n-1}}; f^1_{n-1} folds
    // away against f^2_{n-1}, after which nothing left touches f^1_{n-2}.
    SplitCertificate cert;
    cert.pivot = VertexLabel::e(n - 2);
    cert.zigzag.push_back(remove(VertexLabel::f(1, n - 1), VertexLabel::f(2, n - 1)));
    cert.star_witness = VertexLabel::f(1, n - 2);
    return cert;
}

SplitCertificate y_split_certificate(int m, int n)
{
    require(m >= 2 && n >= 5, "Y_n split certificate needs m >= 2 and n >= 5");
    SplitCertificate cert;
    cert.pivot = VertexLabel::e(n);

    // Y_n \ N[e_n]  ->  Z_n
    cert.zigzag.push_back(remove(VertexLabel::e(n - 3), VertexLabel::f(1, n - 2)));
    for (int k = 1; k <= m; ++k)
        cert.zigzag.push_back(remove(VertexLabel::f(k, n - 4), VertexLabel::f(k, n - 2)));
    // Z_n  ->  Z'_n
    for (int k = 1; k <= m; ++k)
        cert.zigzag.push_back(add(VertexLabel::f(k, n - 1), VertexLabel::f(k, n - 3)));
    // Z'_n  ->  Z''_n
    for (int k = 1; k <= m; ++k)
        cert.zigzag.push_back(remove(VertexLabel::f(k, n - 3), VertexLabel::f(k, n - 1)));

    cert.star_witness = VertexLabel::e(n - 3);
    return cert;
}

}  // namespace gridmatch
