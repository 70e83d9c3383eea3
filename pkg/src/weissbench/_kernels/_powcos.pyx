# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled panel quadrature kernel.

Same contract as powcos_np.powcos_panels: returns (value, abs_contrib_sum)
for sum over panels of (h/2) * sum_i w_i * (shift + s)^a * cos(freq * s).
Panel contributions are accumulated with Neumaier compensated summation so
the result matches the fsum-based NumPy path to roundoff.
"""
from libc.math cimport cos, pow, fabs


def powcos_panels(double a, double shift, double freq,
                  double[::1] edges, double[::1] nodes, double[::1] weights):
    cdef Py_ssize_t m = edges.shape[0] - 1
    cdef Py_ssize_t g = nodes.shape[0]
    cdef Py_ssize_t j, i
    cdef double h2, c, s, acc, contrib
    cdef double total = 0.0, comp = 0.0, t
    cdef double atotal = 0.0, acomp = 0.0
    for j in range(m):
        h2 = 0.5 * (edges[j + 1] - edges[j])
        c = 0.5 * (edges[j + 1] + edges[j])
        acc = 0.0
        for i in range(g):
            s = c + h2 * nodes[i]
            acc += weights[i] * pow(shift + s, a) * cos(freq * s)
        contrib = h2 * acc
        t = total + contrib
        if fabs(total) >= fabs(contrib):
            comp += (total - t) + contrib
        else:
            comp += (contrib - t) + total
        total = t
        contrib = fabs(contrib)
        t = atotal + contrib
        if atotal >= contrib:
            acomp += (atotal - t) + contrib
        else:
            acomp += (contrib - t) + atotal
        atotal = t
    return total + comp, atotal + acomp
