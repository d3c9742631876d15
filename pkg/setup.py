#!/usr/bin/env python3
"""
cliquehom Setup Script
======================

Creates a virtual environment, installs the dependencies, writes a .env file
and runs the gadget self-check and the test suite.

Usage:
    python setup.py [--skip-venv] [--skip-tests] [--help]

Options:
    --skip-venv   Skip virtual environment creation
    --skip-tests  Skip the self-check and the test suite
    --help        Show this help message
"""

import argparse
import platform
import shutil
import subprocess
import sys
from pathlib import Path


class Colors:
    """ANSI color codes for terminal output"""
    HEADER = '\033[95m'
    OKBLUE = '\033[94m'
    OKCYAN = '\033[96m'
    OKGREEN = '\033[92m'
    WARNING = '\033[93m'
    FAIL = '\033[91m'
    ENDC = '\033[0m'
    BOLD = '\033[1m'


def print_colored(message, color=Colors.OKGREEN):
    print(f"{color}{message}{Colors.ENDC}")


def print_step(step_num, message):
    print_colored(f"\n{'='*60}", Colors.HEADER)
    print_colored(f"STEP {step_num}: {message}", Colors.HEADER)
    print_colored(f"{'='*60}", Colors.HEADER)


def run_command(command, check=True):
    """Run a command list and return the completed process, or None on failure"""
    print_colored(f"Running: {' '.join(command)}", Colors.OKBLUE)
    try:
        result = subprocess.run(command, check=check, capture_output=True, text=True)
    except subprocess.CalledProcessError as e:
        print_colored(f"Error: {e.stderr}", Colors.FAIL)
        return None
    if result.stdout:
        print(result.stdout)
    return result


def venv_executable(name):
    """Path of an executable inside ./venv, falling back to the current interpreter"""
    if platform.system().lower() == "windows":
        candidate = Path("venv/Scripts") / f"{name}.exe"
    else:
        candidate = Path("venv/bin") / name
    if candidate.exists():
        return str(candidate)
    return sys.executable if name == "python" else name


def check_python_version():
    print_step(1, "Checking Python Version")
    version = sys.version_info
    if version < (3, 9):
        print_colored("Error: Python 3.9 or higher is required!", Colors.FAIL)
        sys.exit(1)
    print_colored(f"✓ Python {version.major}.{version.minor}.{version.micro} is compatible")


def create_virtual_environment(skip_venv=False):
    if skip_venv:
        print_colored("Skipping virtual environment creation", Colors.WARNING)
        return
    print_step(2, "Creating Virtual Environment")
    if Path("venv").exists():
        print_colored("Virtual environment already exists", Colors.WARNING)
        return
    if not run_command([sys.executable, "-m", "venv", "venv"]):
        print_colored("Failed to create virtual environment", Colors.FAIL)
        sys.exit(1)
    print_colored("✓ Virtual environment created successfully")


def install_dependencies():
    print_step(3, "Installing Dependencies")
    python_cmd = venv_executable("python")
    run_command([python_cmd, "-m", "pip", "install", "--upgrade", "pip"])
    if not run_command([python_cmd, "-m", "pip", "install", "-r", "requirements.txt"]):
        print_colored("Failed to install dependencies", Colors.FAIL)
        sys.exit(1)
    print_colored("✓ Dependencies installed successfully")


def setup_environment_file():
    print_step(4, "Setting up Environment Configuration")
    env_file = Path(".env")
    if env_file.exists():
        print_colored(".env file already exists", Colors.WARNING)
        return
    shutil.copyfile(".env.example", env_file)
    print_colored("✓ .env file created from .env.example")


def run_checks():
    print_step(5, "Running Gadget Self-Check and Tests")
    python_cmd = venv_executable("python")
    result = run_command([python_cmd, "manage.py", "--env", "testing", "check-gadgets"], check=False)
    if result and result.returncode == 0:
        print_colored("✓ Gadget library verified")
    else:
        print_colored("⚠️  Gadget self-check reported failures", Colors.WARNING)
    result = run_command([python_cmd, "-m", "pytest", "-m", "not slow"], check=False)
    if result and result.returncode == 0:
        print_colored("✓ All fast tests passed")
    else:
        print_colored("⚠️  Some tests failed, but setup can continue", Colors.WARNING)


def main():
    parser = argparse.ArgumentParser(description="cliquehom Setup Script")
    parser.add_argument("--skip-venv", action="store_true", help="Skip virtual environment creation")
    parser.add_argument("--skip-tests", action="store_true", help="Skip the self-check and tests")
    args = parser.parse_args()

    print_colored("🚀 cliquehom Setup Script", Colors.HEADER)
    try:
        check_python_version()
        create_virtual_environment(args.skip_venv)
        install_dependencies()
        setup_environment_file()
        if not args.skip_tests:
            run_checks()
        print_colored("\n🎉 Setup completed. Try: python manage.py gadget list", Colors.HEADER)
    except KeyboardInterrupt:
        print_colored("\n\nSetup interrupted by user", Colors.WARNING)
        sys.exit(1)


if __name__ == "__main__":
    # Packaging commands (egg_info, dist_info, bdist_wheel, ...) issued by pip /
    # the setuptools build backend go to setuptools; metadata is in pyproject.toml.
    if len(sys.argv) > 1 and not sys.argv[1].startswith("-"):
        from setuptools import setup
        setup()
    else:
        main()
