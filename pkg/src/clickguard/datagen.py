"""Deterministic synthetic headline corpus for experiments and tests.

The labelled corpus the classifier is meant for is an external download, so
this module fabricates a stand-in with the same shape: balanced clickbait and
news headlines, raw punctuation and casing, and a shared pool of ambiguous
templates drawn identically for both labels so a classifier cannot reach
perfect accuracy. Generation is fully determined by the seed.
"""

from __future__ import annotations

import random
from pathlib import Path
from typing import Sequence

from .preprocess import LabeledExample

_CELEBS = [
    "Harper Quinn", "Dax Morrow", "Lena Vale", "Rocco Steel", "Mina Frost",
    "Jett Callow", "Aria Blaze", "Kip Harmon", "Sable Knox", "Theo Marsh",
    "Ivy Lennox", "Bo Ridley", "Nova Crane", "Ace Winters", "Lola Hart",
    "Finn Dray", "Zara Moss", "Gus Parker", "Remy Slate", "Tess Arden",
]

_VENUES = [
    "The Gym", "A Drive-Thru", "The Airport", "A Yard Sale", "The Red Carpet",
    "A Petting Zoo", "The Grocery Store", "A Karaoke Bar", "The Beach",
    "A Farmers Market", "The Subway", "A Bowling Alley",
]

_ADJS = [
    "Weird", "Genius", "Insane", "Bizarre", "Jaw-Dropping", "Simple",
    "Shocking", "Unbelievable", "Secret", "Crazy", "Mind-Blowing", "Sneaky",
    "Magical", "Outrageous",
]

_SHOCK_VERBS = ["Shock", "Amaze", "Stun", "Transform", "Ruin", "Upgrade", "Rescue", "Wreck"]

_LIFE_NOUNS = [
    "Life", "Mind", "Morning Routine", "Diet", "Career", "Marriage", "Kitchen",
    "Wardrobe", "Paycheck", "Sleep", "Skin", "Brain", "Weekend", "Budget",
    "Workout", "Inbox",
]

_HOUSEHOLD = [
    "Kitchen Gadget", "Phone Case", "Air Fryer", "Houseplant", "Sneaker",
    "Mattress", "Coffee Mug", "Doorbell", "Vacuum", "Blender", "Lamp", "Pillow",
]

_CLICK_TOPICS = [
    "Pineapple Pizza", "Morning Coffee", "Group Chats", "Reality TV", "Skinny Jeans",
    "Houseplants", "Cold Showers", "Office Snacks", "Road Trips", "Board Games",
    "Meal Prep", "Karaoke", "Thrift Shopping", "Juice Cleanses", "Astrology Apps",
    "Gas Station Sushi", "Open Offices", "Standing Desks",
]

_GOALS = [
    "Losing Weight", "Perfect Skin", "Falling Asleep", "Saving Money",
    "Whiter Teeth", "Thicker Hair", "Instant Abs", "Beating Stress",
    "Faster Wifi", "Cheap Flights", "Endless Energy", "Spotless Floors",
]

_GROUPS = [
    "Dentists", "Landlords", "Chefs", "Bankers", "Airlines", "Hairdressers",
    "Personal Trainers", "Plumbers", "Travel Agents", "Baristas",
]

_THINGS = [
    "Avocado Toast", "That Viral Skincare Hack", "The 5AM Club", "Oat Milk",
    "A Tiny House", "Dry January", "The New Diet App", "Sea Moss Smoothies",
    "Digital Detoxing", "Sourdough Starters", "Ice Baths", "Couponing",
]

_CONTAINERS = ["Fridge", "Glovebox", "Garage", "Handbag", "Desk Drawer", "Basement", "Locker"]

_SUPERLATIVES = ["Cutest", "Strangest", "Most Relatable", "Messiest", "Priciest", "Tiniest"]

_TIMEWORDS = ["Week", "Month", "Summer", "Year", "Season", "Winter"]

_CATEGORIES = ["Kitchen", "Travel", "Money", "Beauty", "Fitness", "Parenting", "Dating", "Tech"]

_COUNTRIES = [
    "Norvania", "Elbasan", "Kestria", "Ardonia", "Velmora", "Tarsia",
    "Quillan", "Obrestad", "Madrigal", "Verenia", "Solmark", "Herzfeld",
    "Lantau", "Cardena", "Brivia", "Ostreva",
]

_COMPANIES = [
    "Nortech Industries", "Bluewater Energy", "Halvard Motors", "Crestline Foods",
    "Meridian Rail", "Vantage Pharma", "Ironleaf Timber", "Sundial Airways",
    "Pinnacle Steel", "Harbourline Shipping", "Westfold Mining", "Citrine Telecom",
]

_CITIES = [
    "Eastbrook", "Marlowe", "Kingsport", "Dunmore", "Fairhaven", "Westcliff",
    "Northgate", "Silverton", "Redmoor", "Ashford", "Greyfield", "Loxley",
]

_SECTORS = [
    "Energy", "Agriculture", "Transport", "Fisheries", "Telecoms", "Housing",
    "Steel", "Tourism", "Water", "Rail", "Timber", "Shipping",
]

_ECON = [
    "Inflation", "Supply Chain", "Drought", "Currency", "Trade", "Labour Market",
    "Fuel Cost", "Harvest", "Debt", "Export",
]

_FACTORS = [
    "Shift Work", "Air Quality", "Commuting Time", "Screen Time", "Noise Exposure",
    "Soil Erosion", "Late Meals", "Crop Rotation", "Indoor Heating", "Traffic Density",
]

_OUTCOMES = [
    "Sleep Quality", "Crop Yields", "Heart Health", "Test Scores", "River Pollution",
    "Recovery Times", "Energy Use", "Road Safety", "Hearing Loss", "Property Values",
]

_TEAMS = [
    "Eastbrook Rovers", "Kingsport United", "Dunmore City", "Fairhaven Athletic",
    "Westcliff Wanderers", "Silverton Harriers", "Redmoor Town", "Ashford Albion",
    "Greyfield Corinthians", "Loxley Rangers",
]

_COMPETITIONS = ["Cup", "League", "Championship", "Trophy", "Shield", "Invitational"]

_POLICIES = [
    "Housing Reform", "Water Safety", "School Funding", "Road Pricing",
    "Energy Levy", "Farm Subsidy", "Coastal Protection", "Data Privacy",
    "Rail Franchise", "Public Health",
]

_COMMODITIES = ["Wheat", "Copper", "Crude Oil", "Natural Gas", "Coffee", "Timber", "Steel", "Cotton"]

_MOVEMENTS = ["Climb", "Slip", "Steady", "Surge", "Retreat", "Edge Higher", "Fall Sharply"]

_RESEARCH = [
    "Malaria Vaccine", "Battery Storage", "Drought-Resistant Wheat", "Gene Therapy",
    "Carbon Capture", "Antibiotic Resistance", "Solar Cell", "Flood Modelling",
]

_TITLES = ["Mayor", "Minister", "Chancellor", "Governor", "Senator", "Commissioner"]

_SURNAMES = [
    "Okafor", "Lindqvist", "Moreau", "Tanaka", "Petrov", "Alvarez", "Nkosi",
    "Bergstrom", "Kavanagh", "Demir", "Haugen", "Castillo",
]

_LEGAL = [
    "Land Boundary", "Patent", "Fishing Rights", "Zoning", "Broadcast Licence",
    "Water Rights", "Pension", "Contract",
]

_DISRUPTIONS = [
    "Runway Repairs", "A Power Outage", "Heavy Fog", "A Staffing Strike",
    "Flood Damage", "A Security Review",
]

_QUARTERS = ["First-Quarter", "Second-Quarter", "Third-Quarter", "Fourth-Quarter", "Full-Year"]

_DIRECTIONS = ["Up", "Down"]

_AMBIG_TOPICS = [
    "The Housing Market", "Electric Cars", "Remote Work", "The Census", "Rail Fares",
    "The Budget", "School Lunches", "The Heatwave", "Broadband Rollout", "The Election",
    "Recycling Rules", "The New Stadium", "Water Bills", "The Bridge Closure",
    "Minimum Wage", "The Ferry Service", "Vaccination Rates", "The Tax Deadline",
    "Bus Timetables", "The Harbour Works", "Parking Permits", "The Library Refit",
    "Allotment Waiting Lists", "The Marathon Route", "Bin Collections", "The Pier Restoration",
    "Street Lighting", "The Reservoir Level", "Post Office Hours", "The Tram Extension",
]

_AUDIENCES = ["Renters", "Commuters", "Parents", "Savers", "Farmers", "Students", "Drivers", "Retirees"]

_SECTORS2 = ["Small Towns", "The High Street", "Local Schools", "The Coast", "City Centres", "Rural Clinics"]


def _clickbait(rng: random.Random) -> str:
    n = rng.randint(3, 29)
    make = rng.choice([
        lambda: f"You Won't Believe What {rng.choice(_CELEBS)} Did At {rng.choice(_VENUES)}!",
        lambda: f"{n} {rng.choice(_ADJS)} Tricks That Will {rng.choice(_SHOCK_VERBS)} Your {rng.choice(_LIFE_NOUNS)}",
        lambda: f"This {rng.choice(_HOUSEHOLD)} Trick Will Change Your {rng.choice(_LIFE_NOUNS)} Forever",
        lambda: f"What {rng.choice(_CELEBS)} Said About {rng.choice(_CLICK_TOPICS)} Will {rng.choice(_SHOCK_VERBS)} You",
        lambda: f"{n} Reasons Why {rng.choice(_CLICK_TOPICS)} Is Ruining Your {rng.choice(_LIFE_NOUNS)}",
        lambda: f"The {rng.choice(_SUPERLATIVES)} {rng.choice(_HOUSEHOLD)} You'll See All {rng.choice(_TIMEWORDS)}",
        lambda: f"{rng.choice(_GROUPS)} Hate This One {rng.choice(_ADJS)} Trick For {rng.choice(_GOALS)}",
        lambda: f"We Tried {rng.choice(_THINGS)} For A {rng.choice(_TIMEWORDS)} And Here's What Happened",
        lambda: f"Can You Guess What {rng.choice(_CELEBS)} Keeps In Their {rng.choice(_CONTAINERS)}?",
        lambda: f"{n} {rng.choice(_CATEGORIES)} Secrets {rng.choice(_GROUPS)} Don't Want You To Know",
        lambda: f"This Is Why Everyone Is Obsessed With {rng.choice(_THINGS)} Right Now",
        lambda: f"They Said It Couldn't Be Done. Then {rng.choice(_CELEBS)} Tried {rng.choice(_THINGS)}.",
    ])
    return make()


def _news(rng: random.Random) -> str:
    n = rng.randint(2, 19)
    make = rng.choice([
        lambda: f"{rng.choice(_COUNTRIES)} Announces New {rng.choice(_POLICIES)} Measures For {rng.choice(_SECTORS)} Sector",
        lambda: f"{rng.choice(_COMPANIES)} Reports {rng.choice(_QUARTERS)} Profit {rng.choice(_DIRECTIONS)} {n} Percent",
        lambda: f"{rng.choice(_CITIES)} Council Approves {rng.choice(_POLICIES)} Plan After Lengthy Review",
        lambda: f"Study Finds Link Between {rng.choice(_FACTORS)} And {rng.choice(_OUTCOMES)}",
        lambda: f"{rng.choice(_COUNTRIES)} And {rng.choice(_COUNTRIES)} Sign Agreement On {rng.choice(_SECTORS)} Cooperation",
        lambda: f"{rng.choice(_TEAMS)} Defeat {rng.choice(_TEAMS)} {n}-{rng.randint(0, 3)} In {rng.choice(_COMPETITIONS)} Final",
        lambda: f"Parliament To Vote On {rng.choice(_POLICIES)} Bill Next {rng.choice(_TIMEWORDS)}",
        lambda: f"{rng.choice(_COMMODITIES)} Prices {rng.choice(_MOVEMENTS)} Amid {rng.choice(_ECON)} Concerns",
        lambda: f"Researchers Report Progress On {rng.choice(_RESEARCH)} Project",
        lambda: f"{rng.choice(_TITLES)} {rng.choice(_SURNAMES)} Announces Resignation After {n} Years In Office",
        lambda: f"Court Rules On {rng.choice(_LEGAL)} Dispute In {rng.choice(_CITIES)}",
        lambda: f"{rng.choice(_CITIES)} Airport Reopens After {rng.choice(_DISRUPTIONS)}",
    ])
    return make()


def _ambiguous(rng: random.Random) -> str:
    n = rng.randint(3, 12)
    make = rng.choice([
        lambda: f"{n} Things To Know About {rng.choice(_AMBIG_TOPICS)} This {rng.choice(_TIMEWORDS)}",
        lambda: f"What The {rng.choice(_AMBIG_TOPICS)} Report Means For {rng.choice(_AUDIENCES)}",
        lambda: f"{n} Takeaways From The {rng.choice(_AMBIG_TOPICS)} Announcement",
        lambda: f"How {rng.choice(_AMBIG_TOPICS)} Is Changing {rng.choice(_SECTORS2)}",
        lambda: f"{n} Questions About {rng.choice(_AMBIG_TOPICS)}, Answered",
        lambda: f"The {rng.choice(_AMBIG_TOPICS)} Debate, Explained",
        lambda: f"{n} Charts That Explain {rng.choice(_AMBIG_TOPICS)}",
    ])
    return make()


def generate_corpus(
    size: int = 32_000, seed: int = 1234, ambiguous_rate: float = 0.12
) -> list[LabeledExample]:
    """Balanced corpus of `size` unique headlines, labels alternating.

    Each label draws from the shared ambiguous pool with probability
    `ambiguous_rate`; drawing alternates between labels so both claim an
    equal share of that pool, which caps achievable accuracy below 1.
    """
    rng = random.Random(seed)
    seen: set[str] = set()

    def draw(primary, label: int) -> LabeledExample:
        for _ in range(10_000):
            source = _ambiguous if rng.random() < ambiguous_rate else primary
            text = source(rng)
            if text not in seen:
                seen.add(text)
                return LabeledExample(headline=text, label=label)
        raise RuntimeError("template space exhausted; lower the corpus size")

    return [
        draw(_clickbait, 1) if i % 2 == 0 else draw(_news, 0) for i in range(size)
    ]


def write_two_file(
    examples: Sequence[LabeledExample], positive_path: str | Path, negative_path: str | Path
) -> None:
    for path, wanted in ((positive_path, 1), (negative_path, 0)):
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            for ex in examples:
                if ex.label == wanted:
                    fh.write(ex.headline + "\n")


def write_tsv(examples: Sequence[LabeledExample], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for ex in examples:
            fh.write(f"{ex.label}\t{ex.headline}\n")
