#include "speval/nlnav.hpp"

namespace speval::nlnav {

const std::vector<std::string>& default_vocab() {
  static const std::vector<std::string> vocab = {
      "torch", "infant bed", "American dipper", "jay", "terrapin", "microwave oven",
      "baseball player", "harvestman", "neck brace", "accordion", "acoustic guitar",
      "aircraft carrier", "airliner", "ambulance", "analog clock", "apiary", "apron",
      "backpack", "bagel", "bakery", "balance beam", "balloon", "ballpoint pen", "banana",
      "banjo", "barbell", "barber chair", "barn", "barometer", "barrel", "baseball",
      "basketball", "bassoon", "bath towel", "bathtub", "beach wagon", "beacon", "beaker",
      "beer bottle", "bell pepper", "bicycle", "binoculars", "birdhouse", "bison",
      "black swan", "bloodhound", "bobsled", "bolo tie", "bookcase", "bookshop", "bottle cap",
      "bow tie", "brass instrument", "broccoli", "broom", "bucket", "buckle", "bullet train",
      "burrito", "cabbage", "cab", "caldron", "camera", "candle", "cannon", "canoe",
      "can opener", "cardigan", "car mirror", "carousel", "carpenter kit", "carton",
      "car wheel", "cash machine", "cassette", "castle", "catamaran", "cauliflower", "cello",
      "cellular telephone", "chain", "chainsaw", "chest", "chiffonier", "chime",
      "china cabinet", "church", "cinema", "cleaver", "cliff dwelling", "cloak", "clog",
      "cocktail shaker", "coffee mug", "coffeepot", "coil", "combination lock",
      "computer keyboard", "confectionery", "container ship", "convertible", "corkscrew",
      "cornet", "cowboy boot", "cowboy hat", "cradle", "crane", "crash helmet", "crate",
      "crayfish", "crib", "cricket", "crock pot", "croquet ball", "crutch", "cuirass", "dam",
      "desk", "desktop computer", "dial telephone", "diaper", "digital clock",
      "digital watch", "dining table", "dishrag", "dishwasher", "disk brake", "dock",
      "dogsled", "dome", "doormat", "drilling platform", "drum", "drumstick", "dumbbell",
      "Dutch oven", "electric fan", "electric guitar", "electric locomotive",
      "entertainment center", "envelope", "espresso maker", "face powder", "feather boa",
      "file cabinet", "fireboat", "fire engine", "fire screen", "flagpole", "flamingo",
      "flute", "folding chair", "football helmet", "forklift", "fountain", "fountain pen",
      "four-poster", "freight car", "French horn", "frying pan", "fur coat", "garbage truck",
      "gasmask", "gas pump", "goblet", "go-kart", "golf ball", "golfcart", "gondola", "gong",
      "gown", "grand piano", "greenhouse", "grille", "grocery store", "guillotine",
      "hair slide", "hair spray", "half track", "hammer", "hamper", "hand blower",
      "hand-held computer", "handkerchief", "hard disc", "harmonica", "harp", "harvester",
      "hatchet", "holster", "home theater", "honeycomb", "hook", "hoopskirt",
      "horizontal bar", "horse cart", "hourglass", "iPod", "iron", "jack-o-lantern",
      "jean", "jeep", "jersey", "jigsaw puzzle", "jinrikisha", "joystick", "kimono",
      "knee pad", "knot", "lab coat", "ladle", "lampshade", "laptop", "lawn mower",
      "lens cap", "letter opener", "library", "lifeboat", "lighter", "limousine",
      "liner", "lipstick", "llama", "loafer", "lotion", "loudspeaker", "loupe", "lumbermill",
      "magnetic compass", "mailbag", "mailbox", "maillot", "manhole cover", "maraca",
      "marimba", "mask", "matchstick", "maypole", "maze", "measuring cup", "medicine chest",
      "megalith", "microphone", "military uniform", "milk can", "minibus", "miniskirt",
      "minivan", "missile", "mitten", "mixing bowl", "mobile home", "modem", "monastery",
      "monitor", "moped", "mortar", "mortarboard", "mosque", "mosquito net", "motor scooter",
      "mountain bike", "mountain tent", "mouse", "mousetrap", "moving van", "muzzle", "nail",
      "notebook", "obelisk", "oboe", "ocarina", "odometer", "oil filter", "organ",
      "oscilloscope", "overskirt", "oxcart", "oxygen mask", "packet", "paddle",
      "paddlewheel", "padlock", "paintbrush", "pajama", "palace", "panpipe", "paper towel",
      "parachute", "parallel bars", "park bench", "parking meter", "passenger car", "patio",
      "pay-phone", "pedestal", "pencil box", "pencil sharpener", "perfume", "Petri dish",
      "photocopier", "pick", "pickelhaube", "picket fence", "pickup", "pier", "piggy bank",
      "pill bottle", "pillow", "ping-pong ball", "pinwheel", "pirate ship", "pitcher",
      "plane", "planetarium", "plastic bag", "plate rack", "plow", "plunger",
      "Polaroid camera", "pole", "police van", "poncho", "pool table", "pop bottle",
      "pot", "potter wheel", "power drill", "prayer rug", "printer", "prison", "projectile",
      "projector", "puck", "punching bag", "purse", "quill", "quilt", "racer", "racket",
      "radiator", "radio", "radio telescope", "rain barrel", "recreational vehicle", "reel",
      "reflex camera", "refrigerator", "remote control", "restaurant", "revolver",
      "rifle", "rocking chair", "rotisserie", "rubber eraser", "rugby ball", "rule",
      "running shoe", "safe", "safety pin", "saltshaker", "sandal", "sarong", "saxophone",
      "scabbard", "scale", "school bus", "schooner", "scoreboard", "screen", "screw",
      "screwdriver", "seat belt", "sewing machine", "shield", "shoe shop", "shopping basket",
      "shopping cart", "shovel", "shower cap", "shower curtain", "ski", "ski mask",
      "sleeping bag", "slide rule", "sliding door", "slot", "snorkel", "snowmobile",
      "snowplow", "soap dispenser", "soccer ball", "sock", "solar dish", "sombrero",
      "soup bowl", "space bar", "space heater", "space shuttle", "spatula", "speedboat",
      "spider web", "spindle", "sports car", "spotlight", "stage", "steam locomotive",
      "steel arch bridge", "steel drum", "stethoscope", "stole", "stone wall", "stopwatch",
      "stove", "strainer", "streetcar", "stretcher", "studio couch", "stupa", "submarine",
      "suit", "sundial", "sunglasses", "sunscreen", "suspension bridge", "swab",
      "sweatshirt", "swimming trunks", "swing", "switch", "syringe", "table lamp", "tank",
      "tape player", "teapot", "teddy bear", "television", "tennis ball", "thatch",
      "theater curtain", "thimble", "thresher", "throne", "tile roof", "toaster",
      "tobacco shop", "toilet seat", "totem pole", "tow truck", "toyshop", "tractor",
      "trailer truck", "tray", "trench coat", "tricycle", "trimaran", "tripod",
      "triumphal arch", "trolleybus", "trombone", "tub", "turnstile", "typewriter keyboard",
      "umbrella", "unicycle", "upright piano", "vacuum", "vase", "vault", "velvet",
      "vending machine", "vestment", "viaduct", "violin", "volleyball", "waffle iron",
      "wall clock", "wallet", "wardrobe", "warplane", "washbasin", "washer", "water bottle",
      "water jug", "water tower", "whiskey jug", "whistle", "wig", "window screen",
      "window shade", "Windsor tie", "wine bottle", "wing", "wok", "wooden spoon", "wool",
      "worm fence", "wreck", "yawl", "yurt"};
  return vocab;
}

}  // namespace speval::nlnav
