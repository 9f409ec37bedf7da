"""cyclic-mates stub setup script."""
import setuptools

if __name__ == "__main__":
    setuptools.setup()
