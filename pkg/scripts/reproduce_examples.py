"""Rebuild the worked examples and print their certification reports."""

import numpy as np

from kangle import (
    angle_spectrum,
    binomial_frame,
    certify,
    etf_via_eig,
    mub_family_odd_prime,
    muh_frame,
    reflection_basis,
    sylvester_hadamard,
    union_frame,
)


def show(title, frame):
    print(f"== {title}")
    print(certify(frame).to_text())
    print()


def main():
    np.set_printoptions(precision=4, suppress=True, linewidth=120)
    real = etf_via_eig(np.array([1.0, 1, -1, 1, -1, 1]))
    show("(6,5) real ETF", real)
    print("Gram:\n", real.gram(), "\n")

    cplx = etf_via_eig(np.array([1, 1j, -1, -1j]))
    show("(4,3) complex ETF", cplx)
    print("Gram:\n", cplx.gram(), "\n")

    for d in (3, 4, 5):
        frame = union_frame([np.eye(d), reflection_basis(d)])
        print(f"reflection union d={d}: spectrum {angle_spectrum(frame).values}")
    frame = union_frame([np.eye(8), sylvester_hadamard(3) / np.sqrt(8)])
    print(f"Sylvester union d=8: spectrum {angle_spectrum(frame).values}\n")

    show("MUB frame p=5, n=5", muh_frame(mub_family_odd_prime(5, 5)))
    show("binomial d=3, k=2 (degenerate)", binomial_frame(3, 2))


if __name__ == "__main__":
    main()
