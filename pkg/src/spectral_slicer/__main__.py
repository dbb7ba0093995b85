"""Entry point for `python -m spectral_slicer`."""

from spectral_slicer.cli.main import cli


def main():
    cli()


if __name__ == "__main__":
    main()
