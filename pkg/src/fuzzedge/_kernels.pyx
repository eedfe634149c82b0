# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled streaming edge-map kernels.

Same dataflow as the pure-Python fallback: three 3-slot shift stages chained
through two ring FIFOs of depth width-3 model the window generator, and the
incremental kernel replays the grouped-sums schedule with identical addition
accounting. Outputs are byte-for-byte equal to _kernels_py.
"""

from libc.math cimport sqrt
from libc.stdlib cimport calloc, free, llabs


cdef struct Stream:
    # shift stages: [0] oldest column, [2] newest
    long long t0, t1, t2
    long long m0, m1, m2
    long long b0, b1, b2
    long long *fifo_a
    long long *fifo_b
    int cap
    int pos_a
    int pos_b


cdef inline void stream_push(Stream *st, long long px) nogil:
    cdef long long spill_b, spill_m, out
    spill_b = st.b0
    st.b0 = st.b1; st.b1 = st.b2; st.b2 = px
    if st.cap == 0:
        out = spill_b
    else:
        out = st.fifo_b[st.pos_b]
        st.fifo_b[st.pos_b] = spill_b
        st.pos_b += 1
        if st.pos_b == st.cap:
            st.pos_b = 0
    spill_m = st.m0
    st.m0 = st.m1; st.m1 = st.m2; st.m2 = out
    if st.cap == 0:
        out = spill_m
    else:
        out = st.fifo_a[st.pos_a]
        st.fifo_a[st.pos_a] = spill_m
        st.pos_a += 1
        if st.pos_a == st.cap:
            st.pos_a = 0
    st.t0 = st.t1; st.t1 = st.t2; st.t2 = out


def stream_edge_map_direct(const unsigned char[::1] data, int width, int height,
                           double threshold, bint use_l2=False, bint diagonal=False):
    """Edge bits (one byte per pixel, border ring 0) via direct convolution."""
    if width < 3 or height < 3:
        raise ValueError(f"need at least 3x3, got {width}x{height}")
    if data.shape[0] != width * height:
        raise ValueError(f"data holds {data.shape[0]} pixels, need {width * height}")

    out = bytearray(width * height)
    cdef unsigned char[::1] bits = out
    cdef Stream st
    st.t0 = st.t1 = st.t2 = 0
    st.m0 = st.m1 = st.m2 = 0
    st.b0 = st.b1 = st.b2 = 0
    st.cap = width - 3
    st.pos_a = st.pos_b = 0
    st.fifo_a = NULL
    st.fifo_b = NULL
    if st.cap > 0:
        st.fifo_a = <long long *> calloc(st.cap, sizeof(long long))
        st.fifo_b = <long long *> calloc(st.cap, sizeof(long long))
        if st.fifo_a == NULL or st.fifo_b == NULL:
            free(st.fifo_a); free(st.fifo_b)
            raise MemoryError()

    cdef long long n, total = <long long> width * height
    cdef long long r, c, gx, gy, g3, g4
    cdef double mag
    try:
        with nogil:
            for n in range(total):
                stream_push(&st, data[n])
                r = n // width
                c = n % width
                if r < 2 or c < 2:
                    continue
                gx = (st.t2 + 2 * st.m2 + st.b2) - (st.t0 + 2 * st.m0 + st.b0)
                gy = (st.b0 + 2 * st.b1 + st.b2) - (st.t0 + 2 * st.t1 + st.t2)
                if use_l2:
                    mag = sqrt(<double> (gx * gx + gy * gy))
                else:
                    mag = <double> (llabs(gx) + llabs(gy))
                if diagonal:
                    g3 = -2 * st.t0 - st.t1 - st.m0 + st.m2 + st.b1 + 2 * st.b2
                    g4 = st.t1 + 2 * st.t2 - st.m0 + st.m2 - 2 * st.b0 - st.b1
                    mag += <double> (llabs(g3) + llabs(g4))
                if mag >= threshold:
                    bits[(r - 1) * width + (c - 1)] = 1
    finally:
        free(st.fifo_a)
        free(st.fifo_b)
    return bytes(out)


def stream_edge_map_incremental(const unsigned char[::1] data, int width, int height,
                                double threshold):
    """L1 edge bits via the grouped-sums stream engine, plus its addition count."""
    if width < 3 or height < 3:
        raise ValueError(f"need at least 3x3, got {width}x{height}")
    if data.shape[0] != width * height:
        raise ValueError(f"data holds {data.shape[0]} pixels, need {width * height}")

    out = bytearray(width * height)
    cdef unsigned char[::1] bits = out
    cdef Stream st
    st.t0 = st.t1 = st.t2 = 0
    st.m0 = st.m1 = st.m2 = 0
    st.b0 = st.b1 = st.b2 = 0
    st.cap = width - 3
    st.pos_a = st.pos_b = 0
    st.fifo_a = NULL
    st.fifo_b = NULL

    # grouped-sums caches, same roles as IncrementalStreamEngine
    cdef long long *vns = NULL       # vertical pair sums carried to the next band
    cdef long long *ps_vert = NULL   # vertical 1-2-1 sums of the current band
    cdef long long *hps = NULL       # 1-2-1 row sums, two rows deep by parity
    cdef long long *hns_bot = NULL
    cdef long long *hns_top = NULL

    cdef long long n, total = <long long> width * height
    cdef long long r, c, m, top, bot, j
    cdef long long vb, vt, hps_top, hps_bot, id_r, id_c, mag
    cdef long long adds = 0
    cdef int parity

    try:
        if st.cap > 0:
            st.fifo_a = <long long *> calloc(st.cap, sizeof(long long))
            st.fifo_b = <long long *> calloc(st.cap, sizeof(long long))
            if st.fifo_a == NULL or st.fifo_b == NULL:
                raise MemoryError()
        vns = <long long *> calloc(width, sizeof(long long))
        ps_vert = <long long *> calloc(width, sizeof(long long))
        hps = <long long *> calloc(2 * width, sizeof(long long))
        hns_bot = <long long *> calloc(width, sizeof(long long))
        hns_top = <long long *> calloc(width, sizeof(long long))
        if (vns == NULL or ps_vert == NULL or hps == NULL
                or hns_bot == NULL or hns_top == NULL):
            raise MemoryError()

        with nogil:
            for n in range(total):
                stream_push(&st, data[n])
                r = n // width
                c = n % width
                if r < 2 or c < 2:
                    continue
                m = r - 1
                c = c - 1  # window center
                top = m - 1
                bot = m + 1

                if c == 1:
                    # band start: seed the three leftmost columns and row pair sums
                    for j in range(3):
                        if j == 0:
                            vb = st.m0 + st.b0
                        elif j == 1:
                            vb = st.m1 + st.b1
                        else:
                            vb = st.m2 + st.b2
                        adds += 1
                        if top >= 1:
                            vt = vns[j]
                        else:
                            if j == 0:
                                vt = st.t0 + st.m0
                            elif j == 1:
                                vt = st.t1 + st.m1
                            else:
                                vt = st.t2 + st.m2
                            adds += 1
                        ps_vert[j] = vt + vb
                        vns[j] = vb
                        adds += 1
                    hns_bot[0] = st.b0 + st.b1
                    hns_bot[1] = st.b1 + st.b2
                    adds += 2
                    if top < 2:
                        hns_top[0] = st.t0 + st.t1
                        hns_top[1] = st.t1 + st.t2
                        adds += 2
                else:
                    vb = st.m2 + st.b2
                    adds += 1
                    if top >= 1:
                        vt = vns[c + 1]
                    else:
                        vt = st.t2 + st.m2
                        adds += 1
                    ps_vert[c + 1] = vt + vb
                    vns[c + 1] = vb
                    adds += 1
                    hns_bot[c] = st.b1 + st.b2
                    adds += 1
                    if top < 2:
                        hns_top[c] = st.t1 + st.t2
                        adds += 1

                parity = <int> (bot & 1)
                hps_bot = hns_bot[c - 1] + hns_bot[c]
                if top >= 2:
                    hps_top = hps[parity * width + (c - 1)]
                else:
                    hps_top = hns_top[c - 1] + hns_top[c]
                    adds += 1
                hps[parity * width + (c - 1)] = hps_bot

                id_r = ps_vert[c - 1] - ps_vert[c + 1]
                id_c = hps_top - hps_bot
                adds += 4  # hps_bot, id_r, id_c, and the |id_r|+|id_c| combine
                mag = llabs(id_r) + llabs(id_c)
                if <double> mag >= threshold:
                    bits[m * width + c] = 1
    finally:
        free(st.fifo_a)
        free(st.fifo_b)
        free(vns)
        free(ps_vert)
        free(hps)
        free(hns_bot)
        free(hns_top)
    return bytes(out), adds
