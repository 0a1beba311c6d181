from setuptools import setup, find_packages

setup(
    name="fqx-conjugacy",
    version="0.1.0",
    description="Conjugacy of 2x2 matrices in GL(2, F_q[x]) with exact arithmetic",
    packages=find_packages(exclude=["backend.tests", "backend.tests.*"]),
    include_package_data=True,
    install_requires=[
        "pydantic>=2.0.0",
        "pydantic-settings>=2.0.0",
        "python-dotenv>=0.19.2",
        "PyYAML>=6.0",
        "psutil>=5.9.8",
        "numpy>=1.26.0",
    ],
    extras_require={
        "dev": [
            "pytest",
            "hypothesis",
            "flake8",
            "black",
            "isort",
            "mypy",
        ],
    },
    python_requires=">=3.9",
    entry_points={
        "console_scripts": [
            "fqx-conjugacy=backend.fqx_conjugacy.cli.main:main",
        ],
    },
    package_data={
        "": ["*.yaml"],
    },
)
