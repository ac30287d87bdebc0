from setuptools import setup, find_packages

DEV_REQUIREMENTS = {"pytest", "pytest-cov", "hypothesis", "black", "flake8", "mypy"}

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

with open("requirements.txt", "r", encoding="utf-8") as fh:
    requirements = [line.strip() for line in fh if line.strip() and not line.startswith("#")]

install_requires = [r for r in requirements if r.split(">=")[0] not in DEV_REQUIREMENTS]
dev_requires = [r for r in requirements if r.split(">=")[0] in DEV_REQUIREMENTS]

setup(
    name="channelkit",
    version="1.0.0",
    description="Information flow over classifications: local logics, channels, minimal covers and fusion",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests", "tests.*"]),
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Topic :: Software Development :: Libraries :: Python Modules",
    ],
    python_requires=">=3.8",
    install_requires=install_requires,
    extras_require={
        "dev": dev_requires,
    },
    entry_points={
        "console_scripts": [
            "channelkit=channelkit.cli:main",
        ],
    },
    include_package_data=True,
    keywords=[
        "channel theory", "information flow", "classification", "infomorphism",
        "sequent", "colimit", "local logic", "ontology integration",
    ],
)
