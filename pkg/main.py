from dotenv import load_dotenv

# Load .env variables before settings are read
load_dotenv()

from src.cli import main

if __name__ == "__main__":
    main()
