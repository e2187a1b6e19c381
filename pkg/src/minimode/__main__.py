"""Entry point for `python -m minimode`."""

from minimode.run.app import app

if __name__ == "__main__":
    app()
