from setuptools import setup

setup(
    name="rfr-activation",
    version="0.1.0",
    packages=["activation", "asymptotics", "cli_commands", "optimizer", "simulator", "synthesis", "."],
    package_dir={"": "src"},
    install_requires=["docopt", "schema", "numpy", "scipy"],
    url="",
    license="",
    author="",
    author_email="",
    description="Optimal activation functions for random features regression",
)
