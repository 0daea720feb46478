"""Show why the stored E^2_4 matrix cannot be right.

Two independent arguments:
  * entries depend only on the row and column labels, so the lower-right
    corner of E^2_4 (labels of size <= 2) must equal E^2_2;
  * the dimension count at so(8) inside so(16) fails for the stored matrix
    and holds for the computed one.
"""
from diagquiver.appendix import load_golden
from diagquiver.branching import BranchingMatrix, MatrixFamily, so_matrix
from diagquiver.dimension import dim_check


def corner(m, size):
    idx = [i for i, lab in enumerate(m.labels) if lab.size() <= size]
    return [[m.entries[i][j] for j in idx] for i in idx]


def main():
    computed = so_matrix(2, 4)
    stored_rows = next(g for g in load_golden() if g["family"] == "E" and g["params"] == [4])["entries"]
    stored = BranchingMatrix(MatrixFamily.E, 2, (4,), computed.labels, tuple(map(tuple, stored_rows)))
    small = so_matrix(2, 2).entries
    print("E^2_2:            ", small)
    print("computed corner:  ", corner(computed, 2))
    print("stored corner:    ", corner(stored, 2))
    for name, m in (("computed", computed), ("stored", stored)):
        for line in dim_check(m, 8).lines():
            print(f"{name:9s} {line}")


if __name__ == "__main__":
    main()
