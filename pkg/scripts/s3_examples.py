"""Print the character table of S3 x Z2 x Z2 and the full analysis of the
two bundled S3 designs, including per-character J-characteristics."""

from oachar import fixture_path
from oachar.cli import CliConfig, cmd_chartable, cmd_compute, cmd_strength, cmd_verify


def main():
    cfg = CliConfig(command="", inputs=[], characters=True)
    print(cmd_chartable(["S3", "Z2", "Z2"], cfg)[1])
    for name in ("example1.oa", "example2.oa"):
        path = str(fixture_path(name))
        print()
        print(cmd_compute(path, cfg)[1])
        print(cmd_strength(path, cfg)[1])
        print(cmd_verify(path, cfg)[1])


if __name__ == "__main__":
    main()
